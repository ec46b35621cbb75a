#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "finsym/anomaly.hpp"
#include "finsym/cohomology.hpp"
#include "finsym/error.hpp"
#include "finsym/fusion.hpp"
#include "finsym/ising.hpp"
#include "finsym/json_io.hpp"
#include "finsym/parse.hpp"
#include "finsym/path_integral.hpp"
#include "finsym/tqft2d.hpp"

namespace finsym::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, plain, csv };

/// Rows for CSV / plain table output.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Output {
    Json json;
    std::optional<Table> table;
};

struct Settings {
    Format format = Format::json;
    EnumGuard guard;
    unsigned threads = 1;
};

/// Rounds to 15 significant digits; the JSON writer then prints the shortest form.
inline double round15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

inline std::string fmt15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

namespace detail {

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

inline Json matrix_json(const BordismMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m.entries()) {
        Json r = Json::array();
        for (const auto& x : row) {
            r.push_back(to_string(x));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

inline Json basis_json(const StateSpace& s) {
    Json b = Json::array();
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        b.push_back(s.basis_label(i));
    }
    return b;
}

inline Json bordism_json(const BordismMatrix& m) {
    return Json{{"source_dim", m.cols()},
                {"target_dim", m.rows()},
                {"source_basis", basis_json(m.source())},
                {"target_basis", basis_json(m.target())},
                {"matrix", matrix_json(m)}};
}

inline void write_plain(std::ostream& out, const Json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            write_plain(out, value, prefix.empty() ? key : prefix + "." + key);
        }
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            write_plain(out, j[i], prefix + "[" + std::to_string(i) + "]");
        }
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

inline void write_csv(std::ostream& out, const Table& t) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << (i ? "," : "") << cells[i];
        }
        out << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) {
        line(r);
    }
}

}  // namespace detail

// ---------------------------------------------------------------- commands

struct CohomologyArgs {
    std::string manifold;
    std::string complex_file;
    std::string coeff = "Z2";
    std::optional<std::size_t> degree;
};

inline ChainComplex load_complex(const std::string& manifold, const std::string& file) {
    if (!file.empty()) {
        return json_io::chain_complex_from_json(detail::read_json_file(file));
    }
    if (manifold.empty()) {
        throw InputError("give --manifold or --complex");
    }
    return parse::manifold(manifold);
}

inline Output cmd_cohomology(const CohomologyArgs& a) {
    const ChainComplex c = load_complex(a.manifold, a.complex_file);
    const FiniteAbelianGroup coeff = parse::abelian_group(a.coeff);
    auto entry = [&](std::size_t q) {
        const auto h = cohomology(c, coeff, q);
        return Json{{"degree", q}, {"order", std::to_string(h.order())}, {"invariant_factors", h.group.invariant_factors()},
                    {"group", h.group.name()}};
    };
    Json j{{"manifold", a.manifold.empty() ? a.complex_file : a.manifold}, {"coefficients", coeff.name()}};
    if (a.degree) {
        if (*a.degree > c.top_dim()) {
            throw InputError("degree exceeds the dimension of the complex");
        }
        j.update(entry(*a.degree));
        return {j, std::nullopt};
    }
    Table t{{"degree", "order", "group"}, {}};
    Json all = Json::array();
    for (std::size_t q = 0; q <= c.top_dim(); ++q) {
        auto e = entry(q);
        t.rows.push_back({std::to_string(q), e["order"].get<std::string>(), e["group"].get<std::string>()});
        all.push_back(std::move(e));
    }
    j["degrees"] = std::move(all);
    return {j, t};
}

inline Output cmd_partition(const std::string& target, const std::string& manifold, const std::string& file,
                            const Settings& s) {
    const auto t = parse::target(target);
    const ChainComplex m = load_complex(manifold, file);
    const Rational z = partition_function(t, m, s.guard, s.threads);
    return {Json{{"value", to_string(z)}}, std::nullopt};
}

inline Output cmd_bordism(const std::string& group, const std::string& shape, const Settings& s) {
    const auto g = parse::abelian_group(group);
    Json j{{"group", g.name()}, {"shape", shape}};
    j.update(detail::bordism_json(named_bordism(shape, g, s.guard)));
    return {j, std::nullopt};
}

struct FusionArgs {
    std::string ty;
    std::string group_ring;
    std::string ring_file;
    std::string report = "dims,obstructions";
};

inline Output cmd_fusion(const FusionArgs& a) {
    const int sources = !a.ty.empty() + !a.group_ring.empty() + !a.ring_file.empty();
    if (sources != 1) {
        throw InputError("give exactly one of --ty, --group-ring, --ring");
    }
    const FusionRing ring = !a.ty.empty()            ? tambara_yamagami(parse::group(a.ty))
                            : !a.group_ring.empty() ? group_ring(parse::group(a.group_ring))
                                                     : json_io::fusion_ring_from_json(detail::read_json_file(a.ring_file));
    Json j{{"rank", ring.rank()}};
    Table t{{"label", "dimension", "exact"}, {}};
    bool tabular = false;
    for (const auto& part : detail::split_list(a.report)) {
        if (part == "ring") {
            j["ring"] = json_io::to_json(ring);
        } else if (part == "dims") {
            tabular = true;
            Json dims = Json::object();
            const auto d = pf_dimensions(ring);
            for (std::size_t i = 0; i < d.size(); ++i) {
                dims[ring.labels()[i]] = Json{{"value", round15(d[i].value)}, {"exact", d[i].exact_str()}};
                t.rows.push_back({ring.labels()[i], fmt15(d[i].value), d[i].exact_str()});
            }
            j["dims"] = std::move(dims);
        } else if (part == "obstructions") {
            const auto ff = fiber_functor_obstruction(ring);
            Json f{{"verdict", ff.possible ? "no_obstruction" : "impossible"}};
            if (ff.witness) {
                f["witness"] = ring.labels()[*ff.witness];
                f["witness_dim"] = ff.witness_dim->exact_str();
            }
            const auto sq = square_root_obstruction(ring);
            j["fiber_functor"] = std::move(f);
            j["square_root"] = Json{{"verdict", sq.no_sqrt ? "no_sqrt" : "inconclusive"}, {"reason", sq.reason}};
        } else {
            throw InputError("unknown --report item '" + part + "' (dims, obstructions, ring)");
        }
    }
    return {j, tabular ? std::optional<Table>(t) : std::nullopt};
}

inline std::vector<Phase> parse_phases(const std::string& s) {
    std::vector<Phase> out;
    for (const auto& item : detail::split_list(s)) {
        out.push_back(Phase::parse(item));
    }
    return out;
}

inline Output cmd_lines(const std::string& a_text, const std::string& ap_text, const std::string& q_text,
                        const std::string& cross_text) {
    const auto a = parse::abelian_group(a_text);
    const auto ap = parse::abelian_group(ap_text);
    const auto embed = SubgroupEmbedding::canonical(a, ap);
    std::vector<Phase> gens = (q_text.empty() || q_text == "-") ? std::vector<Phase>{} : parse_phases(q_text);
    if (gens.empty()) {
        gens.assign(ap.rank(), Phase{});
    }
    const QuadraticForm q(ap, gens, parse_phases(cross_text));
    const auto lattice = allowed_lines(embed, q);
    Json pairs = Json::array();
    Table t{{"m", "e"}, {}};
    for (const auto& [m, e] : lattice.pairs) {
        pairs.push_back(Json{{"m", m}, {"e", e}});
        t.rows.push_back({a.element_str(m), a.element_str(e)});
    }
    Json j{{"A", a.name()},
           {"Aprime", ap.name()},
           {"q", json_io::to_json(q)},
           {"size", lattice.pairs.size()},
           {"closed", lattice.closed_under_addition()},
           {"lines", std::move(pairs)}};
    return {j, t};
}

inline Output cmd_anyons(std::int64_t n, std::int64_t p) {
    const auto table = minimal_tft_data(MinimalTFT(n, p));
    Json rows = Json::array();
    Table t{{"k", "spin", "charge"}, {}};
    for (const auto& r : table.anyons) {
        rows.push_back(Json{{"k", r.k}, {"spin", r.spin.str()}, {"charge", r.charge}});
        t.rows.push_back({std::to_string(r.k), r.spin.str(), std::to_string(r.charge)});
    }
    Json braid = Json::array();
    for (const auto& row : table.braiding) {
        Json r = Json::array();
        for (const auto& x : row) {
            r.push_back(x.str());
        }
        braid.push_back(std::move(r));
    }
    Json j{{"N", table.theory.N},
           {"p", table.theory.p},
           {"anyons", std::move(rows)},
           {"braiding", std::move(braid)},
           {"quantum_dim_S3", round15(defect_quantum_dim(n))}};
    return {j, t};
}

struct AnomalyArgs {
    std::optional<std::int64_t> ym_theta_pi;
    std::optional<std::int64_t> instanton_n;
    std::optional<std::int64_t> pontryagin;
    bool spin = false;
    std::string chiral;
};

inline Output cmd_anomaly(const AnomalyArgs& a) {
    const int modes = a.ym_theta_pi.has_value() + a.instanton_n.has_value() + !a.chiral.empty();
    if (modes != 1) {
        throw InputError("give exactly one of --ym-theta-pi, --instanton, --chiral");
    }
    if (a.ym_theta_pi) {
        const auto v = ym_theta_pi_anomaly(*a.ym_theta_pi);
        Json j{{"verdict", v.anomalous ? "anomalous" : "consistent"}};
        if (v.counterterm) {
            j["counterterm"] = *v.counterterm;
        }
        return {j, std::nullopt};
    }
    if (a.instanton_n) {
        if (!a.pontryagin) {
            throw InputError("--instanton needs --pontryagin");
        }
        return {Json{{"fractional_part", fractional_instanton(*a.instanton_n, *a.pontryagin, a.spin).str()}},
                std::nullopt};
    }
    const auto angles = parse_phases(a.chiral);
    if (angles.size() != 2) {
        throw InputError("--chiral takes two angles, e.g. 1/4,1/4");
    }
    const auto f = chiral_fuse(angles[0], angles[1]);
    return {Json{{"result", f.result.str()}, {"condensed", "Z" + std::to_string(f.condensed_order)}}, std::nullopt};
}

inline Output cmd_gauss(std::int64_t n, std::optional<std::int64_t> p) {
    std::vector<std::int64_t> ps;
    if (p) {
        ps.push_back(*p);
    } else {
        for (std::int64_t x = 1; x <= std::max<std::int64_t>(n, 1); ++x) {
            if (std::gcd(x % n, n) == 1) {
                ps.push_back(x % n);
            }
        }
    }
    Json rows = Json::array();
    Table t{{"N", "p", "exact", "direct_re", "direct_im"}, {}};
    for (const auto x : ps) {
        const auto g = gauss_sum(n, x);
        rows.push_back(Json{{"p", x},
                            {"exact", to_string(g.exact)},
                            {"direct", Json::array({round15(g.direct.real()), round15(g.direct.imag())})}});
        t.rows.push_back({std::to_string(n), std::to_string(x), to_string(g.exact), fmt15(g.direct.real()),
                          fmt15(g.direct.imag())});
    }
    return {Json{{"N", n}, {"sums", std::move(rows)}}, t};
}

struct IsingArgs {
    std::size_t L = 0;
    std::size_t T = 0;
    std::optional<double> beta;
    std::string sectors = "all";
    bool gauge = false;
    bool kw = false;
    std::string sweep;
};

inline Output cmd_ising(const IsingArgs& a) {
    static const char* names[4] = {"00", "01", "10", "11"};
    std::vector<int> chosen;
    if (a.sectors == "all") {
        chosen = {0, 1, 2, 3};
    } else {
        for (const auto& s : detail::split_list(a.sectors)) {
            const auto it = std::find(std::begin(names), std::end(names), s);
            if (it == std::end(names)) {
                throw InputError("sector must be all or one of 00,01,10,11 (holonomy hx ht)");
            }
            chosen.push_back(static_cast<int>(it - std::begin(names)));
        }
    }
    auto row_for = [&](double beta) {
        const ising::IsingLattice lat(a.L, a.T, beta);
        const auto z = ising::sector_partitions(lat);
        return std::make_pair(z, ising::gauge_sectors(z));
    };

    if (!a.sweep.empty()) {
        const auto parts = detail::split_list(a.sweep);
        if (parts.size() != 3) {
            throw InputError("--sweep takes lo,hi,count");
        }
        double lo = 0;
        double hi = 0;
        long count = 0;
        try {
            lo = std::stod(parts[0]);
            hi = std::stod(parts[1]);
            count = std::stol(parts[2]);
        } catch (const std::exception&) {
            throw InputError("--sweep takes lo,hi,count");
        }
        if (count < 2 || !(lo > 0) || !(hi > lo)) {
            throw InputError("--sweep needs 0 < lo < hi and count >= 2");
        }
        Table t{{"beta"}, {}};
        for (int s : chosen) {
            t.header.push_back(std::string("Z_") + names[s]);
        }
        if (a.gauge) {
            t.header.push_back("Z_gauged");
        }
        Json rows = Json::array();
        for (long i = 0; i < count; ++i) {
            const double beta = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
            const auto [z, g] = row_for(beta);
            std::vector<std::string> r{fmt15(beta)};
            Json jr{{"beta", round15(beta)}};
            for (int s : chosen) {
                r.push_back(fmt15(z[s]));
                jr[names[s]] = round15(z[s]);
            }
            if (a.gauge) {
                r.push_back(fmt15(g[0]));
                jr["gauged"] = round15(g[0]);
            }
            t.rows.push_back(std::move(r));
            rows.push_back(std::move(jr));
        }
        return {Json{{"L", a.L}, {"T", a.T}, {"sweep", std::move(rows)}}, t};
    }

    if (!a.beta) {
        throw InputError("--beta (or --sweep) is required");
    }
    const auto [z, g] = row_for(*a.beta);
    Json sectors = Json::object();
    for (int s : chosen) {
        sectors[names[s]] = round15(z[s]);
    }
    Json j{{"L", a.L}, {"T", a.T}, {"beta", round15(*a.beta)}, {"sectors", std::move(sectors)}};
    if (a.gauge) {
        Json gs = Json::object();
        for (int s = 0; s < 4; ++s) {
            gs[names[s]] = round15(g[s]);
        }
        j["gauged"] = std::move(gs);
    }
    if (a.kw) {
        j["dual_beta"] = round15(ising::kw_dual_beta(*a.beta));
        j["kw_ratio"] = round15(ising::kw_ratio(a.L, a.T, *a.beta));
    }
    return {j, std::nullopt};
}

inline Output cmd_problem1(const std::string& group) {
    const auto r = solve_problem_one(parse::abelian_group(group));
    Json j{{"group", r.group.name()},
           {"circle_state_space_dim", r.circle_state_space_dim},
           {"pants", detail::bordism_json(r.pants.matrix)},
           {"pants_constant", to_string(r.pants.constant)},
           {"copants", detail::bordism_json(r.copants.matrix)},
           {"copants_constant", to_string(r.copants.constant)}};
    const auto tc = trace_check(1, r.group);
    j["cylinder_trace"] = to_string(tc.trace);
    j["torus"] = to_string(tc.closed_value);
    return {j, std::nullopt};
}

// ---------------------------------------------------------------- driver

inline std::optional<std::uint64_t> env_max_enum() {
    const char* v = std::getenv("FINSYM_MAX_ENUM");
    if (v == nullptr || *v == '\0') {
        return std::nullopt;
    }
    try {
        std::size_t used = 0;
        const auto n = std::stoull(v, &used);
        if (used != std::string(v).size()) {
            throw InputError("");
        }
        return n;
    } catch (const std::exception&) {
        throw InputError(std::string("FINSYM_MAX_ENUM must be a positive integer, got '") + v + "'");
    }
}

inline void emit(const Output& o, const Settings& s, std::ostream& out) {
    switch (s.format) {
        case Format::json:
            out << o.json.dump(2) << "\n";
            break;
        case Format::plain:
            detail::write_plain(out, o.json, "");
            break;
        case Format::csv:
            if (!o.table) {
                throw InputError("this command has no tabular output; use --format json or plain");
            }
            detail::write_csv(out, *o.table);
            break;
    }
}

/// Runs one command line (without the program name). Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact finite-symmetry TFT computations", "finsym"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::optional<std::uint64_t> max_enum;
    unsigned threads = 1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "plain", "csv"}));
    app.add_option("--max-enum", max_enum, "Enumeration budget (capped at 2^24)")->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "Worker threads for enumerations")->check(CLI::Range(1u, 256u));

    CohomologyArgs coh;
    auto* c_coh = app.add_subcommand("cohomology", "H^q(M; A) via Smith normal form");
    c_coh->add_option("--manifold", coh.manifold, "Manifold, e.g. torus:3 or circle*rp:2");
    c_coh->add_option("--complex", coh.complex_file, "Chain complex JSON file");
    c_coh->add_option("--coeff", coh.coeff, "Coefficient group")->capture_default_str();
    c_coh->add_option("--degree", coh.degree, "Degree (default: all)");

    std::string target;
    std::string manifold;
    std::string complex_file;
    auto* c_part = app.add_subcommand("partition", "Path integral of a pi-finite target on a closed manifold");
    c_part->add_option("--target", target, "B<n>:<abelian group> or BG:<group>")->required();
    c_part->add_option("--manifold", manifold, "Closed manifold");
    c_part->add_option("--complex", complex_file, "Chain complex JSON file");

    std::string group = "Z2";
    std::string shape;
    auto* c_bord = app.add_subcommand("bordism", "Linear map of a 2d bordism in finite gauge theory");
    c_bord->add_option("--group", group, "Abelian gauge group")->capture_default_str();
    c_bord->add_option("--shape", shape, "cylinder, pants, copants, cup, cap, torus, surface:g, handles:g")->required();

    FusionArgs fus;
    auto* c_fus = app.add_subcommand("fusion", "Fusion ring dimensions and obstructions");
    c_fus->add_option("--ty", fus.ty, "Tambara-Yamagami ring of an abelian group");
    c_fus->add_option("--group-ring", fus.group_ring, "Group ring of a finite group");
    c_fus->add_option("--ring", fus.ring_file, "Fusion ring JSON file");
    c_fus->add_option("--report", fus.report, "Comma list of dims, obstructions, ring")->capture_default_str();

    std::string line_a;
    std::string line_ap = "Z1";
    std::string line_q;
    std::string line_cross;
    auto* c_lines = app.add_subcommand("lines", "Allowed line defects (m, e) for a quadratic refinement");
    c_lines->add_option("--A", line_a, "Ambient group A")->required();
    c_lines->add_option("--Aprime", line_ap, "Subgroup A' (Z1 for none)")->capture_default_str();
    c_lines->add_option("--q", line_q, "q on the generators of A', comma separated");
    c_lines->add_option("--cross", line_cross, "b(g_i, g_j) for i < j, comma separated");

    std::int64_t any_n = 0;
    std::int64_t any_p = 1;
    auto* c_any = app.add_subcommand("anyons", "Anyon data of the minimal TFT A^{N,p}");
    c_any->add_option("--N", any_n, "N")->required()->check(CLI::PositiveNumber);
    c_any->add_option("--p", any_p, "p, coprime to N")->capture_default_str();

    AnomalyArgs anom;
    auto* c_anom = app.add_subcommand("anomaly", "Anomaly arithmetic");
    c_anom->add_option("--ym-theta-pi", anom.ym_theta_pi, "SU(N) Yang-Mills at theta = pi");
    c_anom->add_option("--instanton", anom.instanton_n, "Fractional instanton number for PSU(N)");
    c_anom->add_option("--pontryagin", anom.pontryagin, "Pontryagin square value");
    c_anom->add_flag("--spin", anom.spin, "Spin manifold");
    c_anom->add_option("--chiral", anom.chiral, "Fuse two chiral defects, e.g. 1/4,1/4");

    std::int64_t gauss_n = 0;
    std::optional<std::int64_t> gauss_p;
    auto* c_gauss = app.add_subcommand("gauss", "Z_N Gauss sums");
    c_gauss->add_option("--N", gauss_n, "N")->required()->check(CLI::PositiveNumber);
    c_gauss->add_option("--p", gauss_p, "p (default: every invertible p)");

    IsingArgs ising_args;
    auto* c_ising = app.add_subcommand("ising", "Twisted-sector Ising partition functions");
    c_ising->add_option("--L", ising_args.L, "Spatial size")->required()->check(CLI::PositiveNumber);
    c_ising->add_option("--T", ising_args.T, "Temporal size")->required()->check(CLI::PositiveNumber);
    c_ising->add_option("--beta", ising_args.beta, "Inverse temperature");
    c_ising->add_option("--sectors", ising_args.sectors, "all or comma list of 00,01,10,11")->capture_default_str();
    c_ising->add_flag("--gauge", ising_args.gauge, "Also report the Z2-gauged sectors");
    c_ising->add_flag("--kw", ising_args.kw, "Also report the dual temperature and duality ratio");
    c_ising->add_option("--sweep", ising_args.sweep, "lo,hi,count beta grid (CSV friendly)");

    std::string p1_group = "Z2";
    auto* c_p1 = app.add_subcommand("problem1", "State space of S^1 and the pair of pants");
    c_p1->add_option("--group", p1_group, "Abelian gauge group")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << "finsym 1.0.0\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        Settings s;
        s.format = format == "plain" ? Format::plain : format == "csv" ? Format::csv : Format::json;
        s.threads = threads;
        if (max_enum) {
            s.guard = EnumGuard::clamp(*max_enum);
        } else if (auto env = env_max_enum()) {
            s.guard = EnumGuard::clamp(*env);
        }

        Output o;
        if (*c_coh) {
            o = cmd_cohomology(coh);
        } else if (*c_part) {
            o = cmd_partition(target, manifold, complex_file, s);
        } else if (*c_bord) {
            o = cmd_bordism(group, shape, s);
        } else if (*c_fus) {
            o = cmd_fusion(fus);
        } else if (*c_lines) {
            o = cmd_lines(line_a, line_ap, line_q, line_cross);
        } else if (*c_any) {
            o = cmd_anyons(any_n, any_p);
        } else if (*c_anom) {
            o = cmd_anomaly(anom);
        } else if (*c_gauss) {
            o = cmd_gauss(gauss_n, gauss_p);
        } else if (*c_ising) {
            o = cmd_ising(ising_args);
        } else if (*c_p1) {
            o = cmd_problem1(p1_group);
        }
        std::ostringstream buf;
        emit(o, s, buf);
        out << buf.str();
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace finsym::cli
