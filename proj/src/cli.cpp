#include "kcob/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <regex>
#include <sstream>

#include "kcob/bounds.hpp"
#include "kcob/covers.hpp"
#include "kcob/errors.hpp"
#include "kcob/factor.hpp"
#include "kcob/json_io.hpp"
#include "kcob/linking_form.hpp"
#include "kcob/metacyclic.hpp"
#include "kcob/render.hpp"

namespace kcob::cli {

namespace {

using nlohmann::json;

// ---- argument parsing ----

Integer parse_integer(const std::string& s, const std::string& flag) {
    static const std::regex digits(R"([+-]?[0-9]+)");
    if (!std::regex_match(s, digits)) throw std::invalid_argument(flag + ": expected an integer, got '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

std::uint64_t parse_u64(const std::string& s, const std::string& flag, std::uint64_t min = 0) {
    Integer v = parse_integer(s, flag);
    if (v < min || !v.fits_ulong_p())
        throw std::invalid_argument(flag + ": expected an integer in [" + std::to_string(min) + ", 2^64), got " + s);
    return v.get_ui();
}

std::int64_t parse_i64(const std::string& s, const std::string& flag) {
    Integer v = parse_integer(s, flag);
    if (!v.fits_slong_p()) throw std::invalid_argument(flag + ": value " + s + " does not fit in 64 bits");
    return v.get_si();
}

// "(2,3),(5,1)"; whitespace allowed.
std::vector<Corner> parse_corners(const std::string& s) {
    static const std::regex item(R"(\s*\(\s*([+-]?[0-9]+)\s*,\s*([+-]?[0-9]+)\s*\)\s*(,|$))");
    std::vector<Corner> out;
    auto it = s.cbegin();
    std::smatch m;
    while (it != s.cend()) {
        if (!std::regex_search(it, s.cend(), m, item, std::regex_constants::match_continuous))
            throw std::invalid_argument("--corners: cannot parse '" + s + "'");
        out.push_back({parse_i64(m[1].str(), "--corners"), parse_i64(m[2].str(), "--corners")});
        it = m[0].second;
    }
    if (out.empty()) throw std::invalid_argument("--corners: no corners given");
    return out;
}

// "((0,4,2),(1,3,2))" or the same without the outer parentheses.
std::vector<GenusTriple> parse_sequence(std::string s) {
    static const std::regex item(R"(\s*\(\s*([+-]?[0-9]+)\s*,\s*([+-]?[0-9]+)\s*,\s*([+-]?[0-9]+)\s*\)\s*(,|$))");
    static const std::regex outer(R"(\s*\((.*)\)\s*)");
    std::smatch m;
    if (std::regex_match(s, m, outer) && m[1].str().find('(') != std::string::npos) s = m[1].str();
    std::vector<GenusTriple> out;
    auto it = s.cbegin();
    while (it != s.cend()) {
        if (!std::regex_search(it, s.cend(), m, item, std::regex_constants::match_continuous))
            throw std::invalid_argument("--sequence: cannot parse '" + s + "'");
        out.push_back({parse_i64(m[1].str(), "--sequence"), parse_i64(m[2].str(), "--sequence"),
                       parse_i64(m[3].str(), "--sequence")});
        it = m[0].second;
    }
    return out;
}

std::vector<Integer> parse_integer_list(const std::string& s, const std::string& flag) {
    std::vector<Integer> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (!tok.empty()) out.push_back(parse_integer(tok, flag));
    }
    return out;
}

Rational parse_rational(std::string s, const std::string& flag) {
    static const std::regex rat(R"(\s*([+-]?[0-9]+)(\s*/\s*([0-9]+))?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, rat)) throw std::invalid_argument(flag + ": expected a rational, got '" + s + "'");
    Integer den = m[3].matched ? parse_integer(m[3].str(), flag) : Integer(1);
    if (sgn(den) == 0) throw std::invalid_argument(flag + ": zero denominator");
    Rational r(parse_integer(m[1].str(), flag), den);
    r.canonicalize();
    return r;
}

// Rows separated by ';', entries by ','.
std::vector<std::vector<Rational>> parse_rational_matrix(const std::string& s, const std::string& flag) {
    std::vector<std::vector<Rational>> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<Rational> r;
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ',')) r.push_back(parse_rational(tok, flag));
        rows.push_back(std::move(r));
    }
    return rows;
}

// Plain built-in names work when no such file exists.
DecoratedKnot knot_arg(const std::string& ref) {
    if (ref.rfind("builtin:", 0) != 0 && !std::ifstream(ref))
        if (auto k = builtin_knot(ref)) return *k;
    return load_knot(ref);
}

DecoratedKnot with_multiplicity(DecoratedKnot k, const std::string& mult, const std::string& flag) {
    Integer m = parse_integer(mult, flag);
    if (sgn(m) < 1) throw std::invalid_argument(flag + " must be positive");
    k.summands *= m;
    return k;
}

std::string element_string(const Element& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

std::string generators_string(const std::vector<Element>& gens) {
    std::string s = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + element_string(gens[i]);
    return s + ">";
}

json group_json(const AbelianGroup& g) {
    json f = json::array();
    for (const auto& d : g.invariant_factors()) f.push_back(integer_to_json(d));
    return {{"group", g.to_string()}, {"invariant_factors", f}};
}

json corners_json(const QuadrantUnion& s) {
    json a = json::array();
    for (const auto& c : s.corners()) a.push_back({c.a, c.b});
    return a;
}

std::string quadrant_string(const Integer& a, const Integer& b) { return "Q(" + a.get_str() + "," + b.get_str() + ")"; }

void emit(std::ostream& out, const std::string& text, const std::string& path) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write '" + path + "'");
    f << text;
}

struct Options {
    std::string format = "text";
    std::string out_path;
};

// ---- commands ----

void cmd_cover(std::ostream& out, const Options& o, const std::string& knot, const std::string& n_str) {
    DecoratedKnot k = knot_arg(knot);
    const std::uint64_t n = parse_u64(n_str, "--n", 2);
    if (k.summands > 4096) throw std::invalid_argument("cover: at most 4096 summands are expanded");
    AbelianGroup g = power(branched_cover_homology(k.seifert, n), k.summands.get_ui());
    if (o.format == "json") {
        json j = group_json(g);
        j["knot"] = k.name;
        j["n"] = n;
        out << j.dump(2) << '\n';
    } else {
        out << g.to_string() << '\n';
    }
}

void cmd_eigen(std::ostream& out, const Options& o, const std::string& knot, const std::string& n_str,
               const std::string& p_str) {
    DecoratedKnot k = knot_arg(knot);
    const std::uint64_t n = parse_u64(n_str, "--n", 2);
    const std::uint64_t p = parse_u64(p_str, "--p", 2);
    EigenBettiTable t = eigenspace_table(k.seifert, n, p);
    const Integer dim = knot_betti_mod_p(k, n, p);
    if (o.format == "json") {
        json rows = json::object();
        for (const auto& [key, b] : t.entries) rows[std::to_string(key.zeta)] = integer_to_json(k.summands * b);
        out << json{{"knot", k.name}, {"n", n}, {"p", p}, {"dimension", integer_to_json(dim)}, {"eigenspaces", rows}}
                   .dump(2)
            << '\n';
        return;
    }
    out << "H1(M_" << n << "; F_" << p << ") has dimension " << dim.get_str() << '\n';
    for (const auto& [key, b] : t.entries) out << "zeta=" << key.zeta << ": " << Integer(k.summands * b).get_str() << '\n';
}

void cmd_alexander(std::ostream& out, const Options& o, const std::string& knot) {
    DecoratedKnot k = knot_arg(knot);
    AlexanderInvariants inv = alexander_invariants(k.seifert);
    RatPoly delta = alexander_polynomial(k.seifert);
    if (o.format == "json") {
        json factors = json::array(), primary = json::array();
        for (const auto& f : inv.decomposition.invariant_factors) factors.push_back(f.to_string());
        for (const auto& [f, r] : inv.primary_ranks)
            primary.push_back({{"factor", f.to_string()}, {"rank", integer_to_json(k.summands * r)}});
        out << json{{"knot", k.name},
                    {"summands", integer_to_json(k.summands)},
                    {"alexander_polynomial", delta.to_string()},
                    {"invariant_factors", factors},
                    {"rank", integer_to_json(knot_alexander_rank(k))},
                    {"primary_ranks", primary}}
                   .dump(2)
            << '\n';
        return;
    }
    out << "Alexander polynomial: " << delta.to_string() << '\n';
    out << "invariant factors:";
    if (inv.decomposition.invariant_factors.empty()) out << " none";
    for (const auto& f : inv.decomposition.invariant_factors) out << " (" << f.to_string() << ")";
    out << '\n';
    if (k.summands != 1) out << "summands: " << k.summands.get_str() << '\n';
    out << "rank: " << knot_alexander_rank(k).get_str() << '\n';
    for (const auto& [f, r] : inv.primary_ranks)
        out << "primary rank at " << f.to_string() << ": " << Integer(k.summands * r).get_str() << '\n';
}

struct BoundArgs {
    std::string k1, k0, mult1 = "1", mult0 = "1", g = "0", g_max, max_n = "6", max_p = "97";
    bool all = false;
};

void cmd_bound(std::ostream& out, const Options& o, const BoundArgs& a) {
    DecoratedKnot k1 = with_multiplicity(knot_arg(a.k1), a.mult1, "--mult1");
    DecoratedKnot k0 = with_multiplicity(knot_arg(a.k0), a.mult0, "--mult0");
    SearchLimits limits{parse_u64(a.max_n, "--max-n", 2), parse_u64(a.max_p, "--max-p", 2)};
    const Integer g_lo = parse_integer(a.g, "--g");
    const Integer g_hi = a.g_max.empty() ? g_lo : parse_integer(a.g_max, "--g-max");
    if (sgn(g_lo) < 0) throw std::invalid_argument("--g must be nonnegative");
    if (g_hi < g_lo) throw std::invalid_argument("--g-max must be at least --g");
    if (g_hi - g_lo > 1000) throw std::invalid_argument("genus range is limited to 1000 values");

    json results = json::array();
    for (Integer g = g_lo; g <= g_hi; ++g) {
        ObstructionResult r = obstruction_staircase(k1, k0, g, limits);
        std::optional<QuadrantUnion> realized = realized_staircase(k1, k0, g);
        if (o.format == "json") {
            json j;
            j["g"] = integer_to_json(g);
            j["staircase"] = corners_json(r.staircase);
            j["best_c0"] = r.best_c0 ? certificate_to_json(*r.best_c0) : json(nullptr);
            j["best_c2"] = r.best_c2 ? certificate_to_json(*r.best_c2) : json(nullptr);
            if (a.all) {
                json certs = json::array();
                for (const auto& c : r.certificates) certs.push_back(certificate_to_json(c));
                j["certificates"] = certs;
            }
            j["realized"] = realized ? corners_json(*realized) : json(nullptr);
            results.push_back(j);
            continue;
        }
        if (g != g_lo) out << '\n';
        const std::string name = "G_" + g.get_str();
        out << name << " ⊆ " << r.staircase.to_string() << '\n';
        if (r.best_c0) out << "  " << r.best_c0->describe() << '\n';
        if (r.best_c2) out << "  " << r.best_c2->describe() << '\n';
        if (realized) {
            if (*realized == r.staircase)
                out << name << " = " << realized->to_string() << '\n';
            else
                out << name << " ⊇ " << realized->to_string() << '\n';
        }
        if (a.all)
            for (const auto& c : r.certificates) out << "    " << c.describe() << '\n';
    }
    if (o.format == "json")
        out << json{{"k1", k1.name},
                    {"mult1", integer_to_json(k1.summands)},
                    {"k0", k0.name},
                    {"mult0", integer_to_json(k0.summands)},
                    {"results", results}}
                   .dump(2)
            << '\n';
}

struct StaircaseArgs {
    std::string corners, propagate, sequence, width, height;
};

void cmd_staircase(std::ostream& out, const Options& o, const StaircaseArgs& a) {
    const int given = !a.corners.empty() + !a.propagate.empty() + !a.sequence.empty();
    if (given != 1) throw std::invalid_argument("give exactly one of --corners, --propagate, --sequence");
    std::optional<GridExtent> extent;
    if (!a.width.empty() || !a.height.empty()) {
        if (a.width.empty() || a.height.empty()) throw std::invalid_argument("--width and --height go together");
        extent = GridExtent{parse_i64(a.width, "--width"), parse_i64(a.height, "--height")};
    }
    if (!a.corners.empty()) {
        QuadrantUnion s = normalize(parse_corners(a.corners));
        if (o.format == "ascii")
            emit(out, render_ascii(s, extent), o.out_path);
        else if (o.format == "svg")
            emit(out, render_svg(s, extent), o.out_path);
        else if (o.format == "json")
            emit(out, json{{"corners", corners_json(s)}, {"set", s.to_string()}}.dump(2) + "\n", o.out_path);
        else
            emit(out, s.to_string() + "\n", o.out_path);
        return;
    }
    GenusFamily f = !a.propagate.empty() ? GenusFamily::propagate(normalize(parse_corners(a.propagate)))
                                         : from_sequence(parse_sequence(a.sequence));
    if (o.format == "ascii") {
        emit(out, render_ascii(f, extent), o.out_path);
    } else if (o.format == "svg") {
        emit(out, render_svg(f, extent), o.out_path);
    } else if (o.format == "json") {
        json panels = json::array(), seq = json::array();
        for (const auto& s : f.per_genus) panels.push_back(corners_json(s));
        for (const auto& t : to_sequence(f)) seq.push_back({t.g, t.a, t.b});
        emit(out, json{{"per_genus", panels}, {"sequence", seq}}.dump(2) + "\n", o.out_path);
    } else {
        std::ostringstream os;
        for (std::size_t g = 0; g < f.per_genus.size(); ++g) os << "g=" << g << ": " << f.per_genus[g].to_string() << '\n';
        os << "sequence: " << sequence_to_string(to_sequence(f)) << '\n';
        emit(out, os.str(), o.out_path);
    }
}

// ---- metacyclic ----

void print_group(std::ostream& out, const Options& o, const AbelianGroup& g) {
    if (o.format == "json")
        out << group_json(g).dump(2) << '\n';
    else
        out << g.to_string() << '\n';
}

void print_value(std::ostream& out, const Options& o, const std::string& label, const Integer& v) {
    if (o.format == "json")
        out << json{{label, integer_to_json(v)}}.dump(2) << '\n';
    else
        out << v.get_str() << '\n';
}

std::uint64_t field_arg(const std::string& s) { return parse_u64(s, "--p", 2); }

void print_isotropic(std::ostream& out, const Options& o, const LinkingForm& form, const std::vector<Metabolizer>& mets) {
    if (o.format == "json") {
        json list = json::array();
        for (const auto& m : mets) {
            json gens = json::array();
            for (const auto& g : m.generators) gens.push_back(g);
            list.push_back({{"generators", gens}, {"order", m.order()}});
        }
        out << json{{"group_order", form.group_order()}, {"metabolizers", list}}.dump(2) << '\n';
        return;
    }
    out << mets.size() << " metabolizers in a group of order " << form.group_order() << '\n';
    for (const auto& m : mets) out << generators_string(m.generators) << '\n';
}

std::string status_string(SupportStatus s) {
    switch (s) {
        case SupportStatus::Holds: return "holds";
        case SupportStatus::Fails: return "fails";
        case SupportStatus::HypothesisViolated: return "hypothesis-violated";
    }
    return "?";
}

void print_cases(std::ostream& out, const Options& o, const ReversibilityReport& r) {
    if (o.format == "json") {
        out << r.to_json().dump(2) << '\n';
        return;
    }
    out << "H1(M3(P)) = " << r.cover_homology.to_string() << '\n';
    out << "eigenspaces over F7:";
    for (const auto& [z, b] : r.eigen_betti)
        if (b) out << " zeta=" << z << " (dim " << b << ")";
    out << '\n';
    for (const auto& c : r.companions) {
        out << c.label << " = " << c.name << " on band " << c.band << ": H1(M7) = " << c.m7.to_string();
        if (c.multiplicity != 1) out << ", " << c.multiplicity.get_str() << " summands";
        out << '\n';
    }
    auto counts = r.case_counts();
    out << r.subspaces_examined << " planes examined, " << r.metabolizers.size() << " equivariant metabolizers (case 1: "
        << counts[0] << ", case 2: " << counts[1] << ", case 3: " << counts[2] << ")\n";
    for (const auto& m : r.metabolizers) {
        out << "case " << m.case_number << "  span{";
        for (int i = 0; i < 2; ++i) {
            out << (i ? ", " : "") << '(';
            for (int k = 0; k < 4; ++k) out << (k ? "," : "") << m.basis[i][k];
            out << ')';
        }
        out << '}';
        if (m.case_number == 3)
            out << "  a=" << m.abcd[0] << " b=" << m.abcd[1] << " c=" << m.abcd[2] << " d=" << m.abcd[3];
        for (const auto& c : m.couplings) out << "  " << c.cover << ':' << c.vector << "->" << c.companion;
        out << '\n';
    }
}

// CLI11 flags are plain strings so that integers of any size pass through.
CLI::Option* num(CLI::App* app, const std::string& name, std::string& target, const std::string& help) {
    return app->add_option(name, target, help)->type_name("INT");
}

void add_format(CLI::App* app, Options& o, std::vector<std::string> allowed) {
    std::string help = "output format (";
    for (std::size_t i = 0; i < allowed.size(); ++i) help += (i ? "|" : "") + allowed[i];
    help += ")";
    app->add_option("--format", o.format, help)->check(CLI::IsMember(allowed))->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact covering-space invariants of knots and bounds on critical points of knot cobordisms", "kcob"};
    app.require_subcommand(1);
    Options o;
    std::function<void()> action;

    // cover
    std::string knot, n, p;
    auto* cover = app.add_subcommand("cover", "H_1 of the n-fold cyclic branched cover");
    cover->add_option("--knot", knot, "knot file, builtin:NAME or a built-in name")->required();
    num(cover, "--n", n, "cover degree (>= 2)")->required();
    add_format(cover, o, {"text", "json"});
    cover->callback([&] { action = [&] { cmd_cover(out, o, knot, n); }; });

    auto* eigen = app.add_subcommand("eigen", "eigenspace Betti numbers of the deck transformation over F_p");
    eigen->add_option("--knot", knot, "knot file, builtin:NAME or a built-in name")->required();
    num(eigen, "--n", n, "cover degree (>= 2)")->required();
    num(eigen, "--p", p, "prime with p = 1 mod n")->required();
    add_format(eigen, o, {"text", "json"});
    eigen->callback([&] { action = [&] { cmd_eigen(out, o, knot, n, p); }; });

    auto* alex = app.add_subcommand("alexander", "rational Alexander module and its primary ranks");
    alex->add_option("--knot", knot, "knot file, builtin:NAME or a built-in name")->required();
    add_format(alex, o, {"text", "json"});
    alex->callback([&] { action = [&] { cmd_alexander(out, o, knot); }; });

    BoundArgs ba;
    auto* bound = app.add_subcommand("bound", "best staircase Q(c0,c2) containing G_g(K1,K0)");
    bound->add_option("--k1", ba.k1, "source knot")->required();
    bound->add_option("--k0", ba.k0, "target knot")->required();
    num(bound, "--mult1", ba.mult1, "copies of K1")->capture_default_str();
    num(bound, "--mult0", ba.mult0, "copies of K0")->capture_default_str();
    num(bound, "--g", ba.g, "genus (start of the range with --g-max)")->capture_default_str();
    num(bound, "--g-max", ba.g_max, "last genus of a range");
    num(bound, "--max-n", ba.max_n, "largest cover degree in the sweep")->capture_default_str();
    num(bound, "--max-p", ba.max_p, "largest prime in the sweep (<= 10000)")->capture_default_str();
    bound->add_flag("--all", ba.all, "list every certificate, not just the best ones");
    add_format(bound, o, {"text", "json"});
    bound->callback([&] { action = [&] { cmd_bound(out, o, ba); }; });

    StaircaseArgs sa;
    auto* stair = app.add_subcommand("staircase", "quadrant unions and genus families as text, ASCII or SVG");
    stair->add_option("--corners", sa.corners, "corner list, e.g. \"(2,3),(5,1)\"");
    stair->add_option("--propagate", sa.propagate, "genus-0 corners; later genera follow by genus shift");
    stair->add_option("--sequence", sa.sequence, "lexicographic (g,a,b) sequence of a family");
    num(stair, "--width", sa.width, "grid width (with --height)");
    num(stair, "--height", sa.height, "grid height (with --width)");
    stair->add_option("--out", o.out_path, "write to this file instead of stdout");
    add_format(stair, o, {"text", "json", "ascii", "svg"});
    stair->callback([&] { action = [&] { cmd_staircase(out, o, sa); }; });

    auto* meta = app.add_subcommand("metacyclic", "metacyclic covers, linking forms and the metacyclic bound");
    meta->require_subcommand(1);

    std::string torsion;
    auto* mv = meta->add_subcommand("mv", "quotient of the surgery relations, optionally with torsion adjoined");
    mv->add_option("--torsion", torsion, "cyclic orders of a group T, e.g. \"7,7\"");
    add_format(mv, o, {"text", "json"});
    mv->callback([&] {
        action = [&] {
            print_group(out, o,
                        torsion.empty() ? mv_quotient_group()
                                        : mv_quotient_with_torsion(AbelianGroup::from_cyclic_orders(
                                              parse_integer_list(torsion, "--torsion"))));
        };
    });

    auto* hom = meta->add_subcommand("homology", "H_1 of the metacyclic cover of K(1,J)");
    hom->add_option("--knot", knot, "the companion J")->required();
    add_format(hom, o, {"text", "json"});
    hom->callback([&] { action = [&] { print_group(out, o, metacyclic_homology_K1J(knot_arg(knot))); }; });

    std::string family = "alpha", coeff, a, m, g, alpha, beta;
    auto* meig = meta->add_subcommand("eigen", "eigenspace Betti number of the metacyclic cover of K(1, c J)");
    meig->add_option("--family", family, "alpha (6_1) or beta (10_3)")->capture_default_str();
    num(meig, "--coeff", coeff, "companion multiple c")->required();
    num(meig, "--p", p, "7 or 19")->required();
    add_format(meig, o, {"text", "json"});
    meig->callback([&] {
        action = [&] {
            print_value(out, o, "betti",
                        metacyclic_eigen_betti(family_from_string(family), parse_integer(coeff, "--coeff"),
                                               field_arg(p)));
        };
    });

    auto* lens = meta->add_subcommand("lens", "3-fold cover of n lens-space cores with a of them lifted");
    num(lens, "--n", n, "number of summands")->required();
    num(lens, "--a", a, "summands with nontrivial character")->required();
    add_format(lens, o, {"text", "json"});
    lens->callback([&] {
        action = [&] {
            CoverDescription d = lens_cover_decomposition(parse_integer(n, "--n"), parse_integer(a, "--a"));
            if (o.format == "json")
                out << d.to_json().dump(2) << '\n';
            else
                out << d.to_string() << '\n';
        };
    });

    auto* multi = meta->add_subcommand("multi-eigen", "eigenspace Betti number for n summands, a of them lifted");
    multi->add_option("--family", family, "alpha (6_1) or beta (10_3)")->capture_default_str();
    num(multi, "--n", n, "number of summands")->required();
    num(multi, "--a", a, "summands with nontrivial character")->required();
    num(multi, "--coeff", coeff, "companion multiple")->required();
    num(multi, "--p", p, "7 or 19")->required();
    add_format(multi, o, {"text", "json"});
    multi->callback([&] {
        action = [&] {
            print_value(out, o, "betti",
                        multi_eigen_betti(family_from_string(family), parse_integer(n, "--n"),
                                          parse_integer(a, "--a"), parse_integer(coeff, "--coeff"), field_arg(p)));
        };
    });

    auto* mbound = meta->add_subcommand("bound", "c0 bound from n K(1, alpha 6_1) to m K(1, beta 10_3)");
    num(mbound, "--alpha", alpha, "6_1 multiple")->required();
    num(mbound, "--m", m, "copies of the target")->required();
    num(mbound, "--g", g, "genus")->required();
    num(mbound, "--n", n, "copies of the source (n > 2g)")->required();
    add_format(mbound, o, {"text", "json"});
    mbound->callback([&] {
        action = [&] {
            BoundCertificate c = metacyclic_c0_bound(parse_integer(alpha, "--alpha"), parse_integer(m, "--m"),
                                                     parse_integer(g, "--g"), parse_integer(n, "--n"));
            if (o.format == "json")
                out << certificate_to_json(c).dump(2) << '\n';
            else
                out << "c0 ≥ " << c.lower_bound.get_str() << '\n' << c.describe() << '\n';
        };
    });

    auto* real = meta->add_subcommand("realize", "realized (c0, c2) corner for the same family");
    num(real, "--n", n, "copies of the source")->required();
    num(real, "--m", m, "copies of the target")->required();
    num(real, "--alpha", alpha, "6_1 multiple")->required();
    num(real, "--beta", beta, "10_3 multiple")->required();
    num(real, "--g", g, "genus")->required();
    add_format(real, o, {"text", "json"});
    real->callback([&] {
        action = [&] {
            auto [c0, c2] = realization_upper(parse_integer(n, "--n"), parse_integer(m, "--m"),
                                              parse_integer(alpha, "--alpha"), parse_integer(beta, "--beta"),
                                              parse_integer(g, "--g"));
            if (o.format == "json")
                out << json{{"c0", integer_to_json(c0)}, {"c2", integer_to_json(c2)}}.dump(2) << '\n';
            else
                out << quadrant_string(c0, c2) << '\n';
        };
    });

    std::string orders, values;
    auto* mets = meta->add_subcommand("metabolizers", "all metabolizers of a linking form (|G| <= 9^4)");
    num(mets, "--n", n, "standard form: summands with value 2/9");
    num(mets, "--m", m, "standard form: summands with value -2/9");
    mets->add_option("--orders", orders, "custom form: cyclic orders, e.g. \"7,7\"");
    mets->add_option("--values", values, "custom form: rows separated by ';', e.g. \"0,1/7;1/7,0\"");
    add_format(mets, o, {"text", "json"});
    mets->callback([&] {
        action = [&] {
            std::optional<LinkingForm> form;
            if (!orders.empty() || !values.empty()) {
                if (orders.empty() || values.empty() || !n.empty() || !m.empty())
                    throw std::invalid_argument("give --orders with --values, or --n with --m");
                std::vector<std::uint32_t> ord;
                for (const auto& v : parse_integer_list(orders, "--orders")) {
                    if (v < 2 || v > 1000000) throw std::invalid_argument("--orders: each order must be in [2, 10^6]");
                    ord.push_back(static_cast<std::uint32_t>(v.get_ui()));
                }
                form.emplace(ord, parse_rational_matrix(values, "--values"));
            } else {
                if (n.empty() || m.empty()) throw std::invalid_argument("give --n and --m, or --orders and --values");
                form.emplace(LinkingForm::standard(static_cast<std::uint32_t>(parse_u64(n, "--n")),
                                                   static_cast<std::uint32_t>(parse_u64(m, "--m"))));
            }
            print_isotropic(out, o, *form, enumerate_metabolizers(*form));
        };
    });

    bool verbose = false;
    auto* support = meta->add_subcommand("support", "order-3 support of large isotropic subgroups on the first block");
    num(support, "--n", n, "first block size")->required();
    num(support, "--m", m, "second block size")->required();
    num(support, "--g", g, "genus")->required();
    support->add_flag("--verbose", verbose, "list every subgroup with its witness");
    add_format(support, o, {"text", "json"});
    support->callback([&] {
        action = [&] {
            const auto nn = static_cast<std::uint32_t>(parse_u64(n, "--n"));
            SupportCheck r = metabolizer_support_check(nn, static_cast<std::uint32_t>(parse_u64(m, "--m")),
                                                       static_cast<std::uint32_t>(parse_u64(g, "--g")));
            if (o.format == "json") {
                json subs = json::array();
                for (const auto& s : r.subgroups) {
                    json gens = json::array();
                    for (const auto& e : s.subgroup.generators) gens.push_back(e);
                    subs.push_back({{"generators", gens},
                                    {"order", s.subgroup.order()},
                                    {"witness", s.witness ? json(*s.witness) : json(nullptr)}});
                }
                out << json{{"status", status_string(r.status)}, {"subgroups", subs}}.dump(2) << '\n';
                return;
            }
            out << status_string(r.status);
            if (r.status != SupportStatus::HypothesisViolated) out << " (" << r.subgroups.size() << " subgroups checked)";
            out << '\n';
            for (const auto& s : r.subgroups)
                if (verbose || !s.witness)
                    out << generators_string(s.subgroup.generators) << "  witness "
                        << (s.witness ? element_string(*s.witness) : std::string("none")) << '\n';
        };
    });

    auto* cases = meta->add_subcommand("cases", "equivariant metabolizers for a knot and its reverse");
    cases->add_option("--knot", knot, "P(J1,J2): P(3,-3,3) with companions on both bands")->required();
    add_format(cases, o, {"text", "json"});
    cases->callback([&] { action = [&] { print_cases(out, o, reversibility_cases(knot_arg(knot))); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUser;
    }

    try {
        if (action) action();
        return kExitOk;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUser;
    }
}

}  // namespace kcob::cli
