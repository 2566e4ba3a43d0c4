// Command-line front end: parses a structured config (or inline flags),
// dispatches the polyhedral computations and prints text or JSON reports.
//
// Exit codes: 0 success, 2 validation/input error, 3 resource cap exceeded.
// The enumeration cap honors the DICART_ENUM_CAP environment variable.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dicart/cartier.hpp"
#include "dicart/fsignature.hpp"
#include "dicart/oracle.hpp"
#include "dicart/polytope.hpp"
#include "dicart/toric.hpp"

namespace {

using namespace dicart;
using ojson = nlohmann::ordered_json;

constexpr const char* kSchema = "dicart/v1";

// ---------------------------------------------------------------------------
// Input plumbing

std::int64_t enum_cap() {
    const char* raw = std::getenv("DICART_ENUM_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultEnumCap;
    try {
        const std::int64_t cap = std::stoll(raw);
        if (cap <= 0) throw std::invalid_argument("nonpositive");
        return cap;
    } catch (const std::exception&) {
        throw std::invalid_argument("DICART_ENUM_CAP must be a positive integer");
    }
}

ojson load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    try {
        return ojson::parse(in);
    } catch (const ojson::exception& e) {
        throw std::invalid_argument("config '" + path + "': " + e.what());
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

Int int_from_json(const ojson& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            const Rat r = parse_rat(j.get<std::string>());
            if (denominator(r) != 1) throw std::invalid_argument("fractional");
            return numerator(r);
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument(std::string(what) + ": expected an integer");
}

Rat rat_from_json(const ojson& j, const char* what) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument(std::string(what) +
                                ": expected an integer or a \"num/den\" string");
}

std::vector<std::vector<Int>> rays_input(const ojson& config, const std::string& inline_rays) {
    if (!inline_rays.empty()) {
        std::vector<std::vector<Int>> rays;
        for (const std::string& part : split(inline_rays, ';')) {
            std::vector<Int> ray;
            for (const std::string& c : split(part, ','))
                ray.push_back(int_from_json(ojson(c), "--rays"));
            if (ray.size() > 3)
                throw std::invalid_argument("--rays supports dimension <= 3; use a config file");
            rays.push_back(std::move(ray));
        }
        return rays;
    }
    if (config.contains("rays")) {
        const ojson& jr = config.at("rays");
        if (!jr.is_array() || jr.empty())
            throw std::invalid_argument("config: \"rays\" must be a nonempty array");
        std::vector<std::vector<Int>> rays;
        for (const ojson& row : jr) {
            if (!row.is_array()) throw std::invalid_argument("config: each ray must be an array");
            std::vector<Int> ray;
            for (const ojson& c : row) ray.push_back(int_from_json(c, "rays"));
            rays.push_back(std::move(ray));
        }
        return rays;
    }
    throw std::invalid_argument("no ray data: pass --rays or a config file with \"rays\"");
}

std::int64_t level_p(const ojson& config, std::int64_t flag_p) {
    if (flag_p != 0) return flag_p;
    if (config.contains("p")) {
        const Int p = int_from_json(config.at("p"), "p");
        return p.convert_to<std::int64_t>();
    }
    throw std::invalid_argument("no characteristic: pass --p or a config file with \"p\"");
}

int level_e(const ojson& config, int flag_e) {
    if (flag_e != 0) return flag_e;
    if (config.contains("e")) return int_from_json(config.at("e"), "e").convert_to<int>();
    return 1;
}

FracVector d_input(const ojson& config, const std::string& inline_d, const Int& q, int dim) {
    std::vector<Int> nums;
    if (!inline_d.empty()) {
        for (const std::string& c : split(inline_d, ','))
            nums.push_back(int_from_json(ojson(c), "--d"));
    } else if (config.contains("d")) {
        for (const ojson& c : config.at("d")) nums.push_back(int_from_json(c, "d"));
    } else {
        throw std::invalid_argument(
            "no index point: pass --d or a config file with \"d\" "
            "(integer numerators at denominator q)");
    }
    if (static_cast<int>(nums.size()) != dim)
        throw std::invalid_argument("index point dimension does not match the rays");
    return FracVector(std::move(nums), q);
}

std::optional<Box> box_input(const ojson& config, const std::string& inline_box, int dim) {
    Box box;
    if (!inline_box.empty()) {
        for (const std::string& part : split(inline_box, ';')) {
            const auto ends = split(part, ',');
            if (ends.size() != 2)
                throw std::invalid_argument("--box: expected \"lo,hi;lo,hi;...\"");
            box.emplace_back(parse_rat(ends[0]), parse_rat(ends[1]));
        }
    } else if (config.contains("box")) {
        for (const ojson& pair : config.at("box")) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("config: each box entry must be [lo, hi]");
            box.emplace_back(rat_from_json(pair[0], "box"), rat_from_json(pair[1], "box"));
        }
    } else {
        return std::nullopt;
    }
    if (static_cast<int>(box.size()) != dim)
        throw std::invalid_argument("box dimension does not match the rays");
    for (const auto& [lo, hi] : box)
        if (lo > hi) throw std::invalid_argument("box interval with lo > hi");
    return box;
}

Relation relation_from(const std::string& s) {
    if (s == ">=") return Relation::GreaterEq;
    if (s == ">") return Relation::Greater;
    if (s == "<=") return Relation::LessEq;
    if (s == "<") return Relation::Less;
    throw std::invalid_argument("face relation must be one of \">=\", \">\", \"<=\", \"<\"");
}

HPolytope polytope_input(const ojson& config) {
    if (!config.contains("polytope"))
        throw std::invalid_argument("volume needs a config file with a \"polytope\" object");
    const ojson& jp = config.at("polytope");
    const int dim = int_from_json(jp.at("dim"), "polytope.dim").convert_to<int>();
    std::vector<HalfSpace> faces;
    for (const ojson& jf : jp.at("faces")) {
        HalfSpace f;
        for (const ojson& c : jf.at("normal")) f.normal.push_back(int_from_json(c, "normal"));
        f.bound = rat_from_json(jf.at("bound"), "bound");
        f.rel = relation_from(jf.at("rel").get<std::string>());
        faces.push_back(std::move(f));
    }
    return make_polytope(dim, std::move(faces));
}

// ---------------------------------------------------------------------------
// Output plumbing

ojson int_json(const Int& k) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (k >= lo && k <= hi) return k.convert_to<std::int64_t>();
    return k.str();
}

ojson rat_json(const Rat& r) { return rat_str(r); }

ojson fv_json(const FracVector& v) {
    ojson nums = ojson::array();
    for (const Int& k : v.num) nums.push_back(int_json(k));
    return ojson{{"num", nums}, {"den", int_json(v.den)}};
}

ojson class_json(const ResidueClass& c) {
    ojson out = ojson::array();
    for (const Int& k : c.res) out.push_back(int_json(k));
    return out;
}

std::string tuple_str(const std::vector<Int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

// A point both as fractions and in q-scaled integer form,
// e.g. "(-4/5, -1/5) = (1/5)*(-4, -1)".
std::string fv_text(const FracVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) out += ", ";
        out += rat_str(v.coord(i));
    }
    out += ") = (1/" + v.den.str() + ")*" + tuple_str(v.num);
    return out;
}

std::string class_text(const ResidueClass& c) { return tuple_str(c.res); }

std::string rats_text(const std::vector<Rat>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(v[i]);
    }
    return out + ")";
}

std::string box_text(const Box& box) {
    std::string out;
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (i) out += " x ";
        out += "[" + rat_str(box[i].first) + ", " + rat_str(box[i].second) + "]";
    }
    return out;
}

ojson box_json(const Box& box) {
    ojson out = ojson::array();
    for (const auto& [lo, hi] : box) out.push_back(ojson::array({rat_str(lo), rat_str(hi)}));
    return out;
}

ojson doc_head(const char* command) {
    return ojson{{"schema", kSchema}, {"command", command}};
}

void emit(const ojson& doc) { std::cout << doc.dump(2) << "\n"; }

ojson datum_json(const ToricDatum& datum) {
    ojson rays = ojson::array();
    for (const auto& r : datum.rays) {
        ojson row = ojson::array();
        for (const Int& k : r) row.push_back(int_json(k));
        rays.push_back(row);
    }
    return rays;
}

// ---------------------------------------------------------------------------
// Subcommands

void run_info(const ToricDatum& datum, bool json) {
    const auto shift = gorenstein_shift(datum);
    const bool smooth = is_smooth(datum);
    if (json) {
        ojson doc = doc_head("info");
        doc["dim"] = datum.dim;
        doc["rays"] = datum_json(datum);
        doc["smooth"] = smooth;
        if (shift) {
            ojson sv = ojson::array();
            for (const Rat& x : *shift) sv.push_back(rat_json(x));
            doc["gorenstein_shift"] = sv;
        } else {
            doc["gorenstein_shift"] = nullptr;
        }
        emit(doc);
        return;
    }
    std::cout << "dimension: " << datum.dim << "\n";
    std::cout << "rays:";
    for (const auto& r : datum.rays) std::cout << " " << tuple_str(r);
    std::cout << "\n";
    std::cout << "smooth: " << (smooth ? "yes" : "no") << "\n";
    if (shift)
        std::cout << "gorenstein shift: " << rats_text(*shift) << "\n";
    else
        std::cout << "gorenstein shift: none\n";
}

void run_basis(const ToricDatum& datum, const FrobeniusLevel& level,
               const std::optional<Box>& box, std::int64_t cap, bool json) {
    if (!box) throw std::invalid_argument("basis needs a box (--box or config \"box\")");
    const auto basis = payne_basis(datum, level, *box, cap);
    if (json) {
        ojson doc = doc_head("basis");
        doc["p"] = level.p;
        doc["e"] = level.e;
        doc["q"] = int_json(level.q);
        doc["box"] = box_json(*box);
        doc["count"] = basis.size();
        ojson pts = ojson::array();
        for (const auto& m : basis) pts.push_back(fv_json(m.point));
        doc["points"] = pts;
        emit(doc);
        return;
    }
    std::cout << "q = " << level.q << " = " << level.p << "^" << level.e << "\n";
    std::cout << "box: " << box_text(*box) << "\n";
    std::cout << "basis points (" << basis.size() << "):\n";
    for (const auto& m : basis) std::cout << "  " << fv_text(m.point) << "\n";
}

void run_d2_check(const ToricDatum& datum, const FrobeniusLevel& level, const FracVector& d,
                  std::int64_t cap, bool json) {
    const D2Certificate cert = d2_contains(datum, level, d, cap);
    const bool member = cert.verdict == Verdict::Member;
    if (json) {
        ojson doc = doc_head("d2 check");
        doc["p"] = level.p;
        doc["e"] = level.e;
        doc["q"] = int_json(level.q);
        doc["d"] = fv_json(d);
        doc["verdict"] = member ? "Member" : "NonMember";
        if (member) {
            ojson wits = ojson::array();
            for (const auto& [cls, wit] : cert.witnesses)
                wits.push_back(ojson{{"class", class_json(cls)}, {"point", fv_json(wit)}});
            doc["witnesses"] = wits;
        } else {
            doc["missing_class"] = class_json(*cert.missing_class);
        }
        emit(doc);
        return;
    }
    std::cout << "d = " << fv_text(d) << "\n";
    std::cout << "verdict: " << (member ? "Member" : "NonMember") << "\n";
    if (member) {
        std::cout << "witnesses (" << cert.witnesses.size() << "), one per residue class:\n";
        for (const auto& [cls, wit] : cert.witnesses)
            std::cout << "  class " << class_text(cls) << ": " << fv_text(wit) << "\n";
    } else {
        std::cout << "missing class: " << class_text(*cert.missing_class) << " of (1/"
                  << level.q << ")Z^" << datum.dim << " mod Z^" << datum.dim << "\n";
    }
}

void run_d2_gens(const ToricDatum& datum, const FrobeniusLevel& level,
                 const std::optional<Box>& box, std::int64_t cap, bool json) {
    const GeneratorResult res = d2_minimal_generators(datum, level, box, cap);
    if (json) {
        ojson doc = doc_head("d2 gens");
        doc["p"] = level.p;
        doc["e"] = level.e;
        doc["q"] = int_json(level.q);
        doc["box"] = box_json(res.box);
        doc["box_auto"] = res.box_auto;
        doc["expansions"] = res.expansions;
        doc["count"] = res.generators.size();
        ojson gens = ojson::array();
        for (const auto& g : res.generators) gens.push_back(fv_json(g));
        doc["generators"] = gens;
        emit(doc);
        return;
    }
    std::cout << "q = " << level.q << " = " << level.p << "^" << level.e << "\n";
    std::cout << "box: " << box_text(res.box)
              << (res.box_auto ? " (auto, from the gorenstein shift)" : " (explicit)") << "\n";
    if (res.box_auto) std::cout << "stabilization expansions: " << res.expansions << "\n";
    std::cout << "minimal generators (" << res.generators.size() << "):\n";
    for (const auto& g : res.generators) std::cout << "  " << fv_text(g) << "\n";
}

void run_split(const ToricDatum& datum, std::int64_t p, std::int64_t cap, bool json) {
    const bool split = is_diagonally_split(datum, FrobeniusLevel(p, 1), cap);
    if (json) {
        ojson doc = doc_head("split");
        doc["p"] = p;
        doc["diagonally_f_split"] = split;
        emit(doc);
        return;
    }
    std::cout << "p = " << p << ": " << (split ? "diagonally F-split" : "not diagonally F-split")
              << "\n";
}

void run_fsig(const ToricDatum& datum, std::int64_t p, int e_max, std::int64_t cap, bool json) {
    const Rat vol = fsig_volume(datum);
    const auto rows = fsig_sequence(datum, p, e_max, cap);
    if (json) {
        ojson doc = doc_head("fsig");
        doc["p"] = p;
        doc["e_max"] = e_max;
        doc["volume"] = rat_json(vol);
        doc["smooth"] = is_smooth(datum);
        ojson jrows = ojson::array();
        for (const auto& r : rows)
            jrows.push_back(ojson{{"e", r.e},
                                  {"q", int_json(r.q)},
                                  {"split_count", r.split_count},
                                  {"d2_count", r.d2_count},
                                  {"split_ratio", rat_json(r.split_ratio)},
                                  {"d2_ratio", rat_json(r.d2_ratio)}});
        doc["rows"] = jrows;
        emit(doc);
        return;
    }
    std::cout << "signature volume: " << rat_str(vol) << "\n";
    std::cout << std::setw(4) << "e" << std::setw(8) << "q" << std::setw(14) << "split_count"
              << std::setw(10) << "d2_count" << std::setw(14) << "split_ratio" << std::setw(12)
              << "d2_ratio" << "\n";
    for (const auto& r : rows)
        std::cout << std::setw(4) << r.e << std::setw(8) << r.q.str() << std::setw(14)
                  << r.split_count << std::setw(10) << r.d2_count << std::setw(14)
                  << rat_str(r.split_ratio) << std::setw(12) << rat_str(r.d2_ratio) << "\n";
}

void run_oracle(const ToricDatum& datum, const FrobeniusLevel& level, const FracVector& d,
                std::int64_t cap, bool json) {
    const OracleReport rep = oracle_d2_report(datum, level, d, cap);
    if (json) {
        ojson doc = doc_head("oracle");
        doc["p"] = level.p;
        doc["e"] = level.e;
        doc["q"] = int_json(level.q);
        doc["d"] = fv_json(d);
        doc["member"] = rep.member;
        ojson tr = ojson::array();
        for (const auto& [what, ok] : rep.transcript)
            tr.push_back(ojson{{"check", what}, {"ok", ok}});
        doc["transcript"] = tr;
        emit(doc);
        return;
    }
    std::cout << "d = " << fv_text(d) << "\n";
    std::cout << "verdict: " << (rep.member ? "Member" : "NonMember") << "\n";
    std::cout << "transcript:\n";
    for (const auto& [what, ok] : rep.transcript)
        std::cout << "  [" << (ok ? "ok" : "FAIL") << "] " << what << "\n";
}

void run_volume(const ojson& config, bool json) {
    const HPolytope poly = polytope_input(config);
    const Rat vol = exact_volume(poly);
    if (json) {
        ojson doc = doc_head("volume");
        doc["dim"] = poly.dim;
        doc["faces"] = poly.faces.size();
        doc["volume"] = rat_json(vol);
        emit(doc);
        return;
    }
    std::cout << "volume: " << rat_str(vol) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"second diagonal Cartier algebra data for affine toric cones"};
    app.require_subcommand(1);

    std::string config_path, rays_inline, box_inline, d_inline;
    std::string format = "text";
    std::int64_t p_flag = 0;
    int e_flag = 0;
    int emax_flag = 0;

    const auto add_common = [&](CLI::App* cmd, bool with_level) {
        cmd->add_option("--config", config_path, "JSON config file");
        cmd->add_option("--rays", rays_inline,
                        "inline rays \"a,b;c,d\" (dimension <= 3)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_level) {
            cmd->add_option("--p", p_flag, "characteristic (prime)");
            cmd->add_option("--e", e_flag, "Frobenius iterate, q = p^e");
        }
    };

    CLI::App* info = app.add_subcommand("info", "cone summary, shift vector, smoothness");
    add_common(info, false);

    CLI::App* basis = app.add_subcommand("basis", "basis maps indexed inside a box");
    add_common(basis, true);
    basis->add_option("--box", box_inline, "inline box \"lo,hi;lo,hi\"");

    CLI::App* d2 = app.add_subcommand("d2", "second diagonal Cartier algebra");
    d2->require_subcommand(1);
    CLI::App* d2_check = d2->add_subcommand("check", "membership certificate for one index");
    add_common(d2_check, true);
    d2_check->add_option("--d", d_inline, "index point numerators at denominator q");
    CLI::App* d2_gens = d2->add_subcommand("gens", "minimal generators under the divisibility order");
    add_common(d2_gens, true);
    d2_gens->add_option("--box", box_inline, "inline box \"lo,hi;lo,hi\"");

    CLI::App* split_cmd = app.add_subcommand("split", "diagonal F-splitting verdict");
    add_common(split_cmd, true);

    CLI::App* fsig = app.add_subcommand("fsig", "signature volume and level table");
    add_common(fsig, true);
    fsig->add_option("--e-max", emax_flag, "levels e = 1..e_max in the table");

    CLI::App* oracle = app.add_subcommand("oracle", "independent membership check + transcript");
    add_common(oracle, true);
    oracle->add_option("--d", d_inline, "index point numerators at denominator q");

    CLI::App* volume = app.add_subcommand("volume", "exact volume of a configured polytope");
    add_common(volume, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const std::int64_t cap = enum_cap();
        const ojson config = config_path.empty() ? ojson::object() : load_config(config_path);
        const bool json = format == "json";

        if (volume->parsed()) {
            run_volume(config, json);
            return 0;
        }

        const ToricDatum datum = from_rays(rays_input(config, rays_inline));
        if (info->parsed()) {
            run_info(datum, json);
            return 0;
        }

        const std::int64_t p = level_p(config, p_flag);
        if (split_cmd->parsed()) {
            run_split(datum, p, cap, json);
            return 0;
        }
        if (fsig->parsed()) {
            int e_max = emax_flag;
            if (e_max == 0 && config.contains("e_max"))
                e_max = int_from_json(config.at("e_max"), "e_max").convert_to<int>();
            if (e_max == 0) e_max = 2;
            run_fsig(datum, p, e_max, cap, json);
            return 0;
        }

        const FrobeniusLevel level(p, level_e(config, e_flag));
        if (basis->parsed()) {
            run_basis(datum, level, box_input(config, box_inline, datum.dim), cap, json);
        } else if (d2_check->parsed()) {
            run_d2_check(datum, level, d_input(config, d_inline, level.q, datum.dim), cap, json);
        } else if (d2_gens->parsed()) {
            run_d2_gens(datum, level, box_input(config, box_inline, datum.dim), cap, json);
        } else if (oracle->parsed()) {
            run_oracle(datum, level, d_input(config, d_inline, level.q, datum.dim), cap, json);
        }
        return 0;
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
