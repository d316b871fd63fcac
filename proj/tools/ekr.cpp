// ekr: command-line front end to the library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap refusal.

#include <ekr/ekr.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::ordered_json;
using namespace ekr;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

struct Common {
    std::string format = "json";
    unsigned workers = 1;
};

ordered_json big(const BigInt& v) { return to_string(v); }
ordered_json big(const BigRat& v) { return to_string(v); }

double approx(const BigRat& v) { return static_cast<double>(v); }

template <class Vec>
ordered_json big_list(const Vec& xs)
{
    auto a = ordered_json::array();
    for (const auto& x : xs) a.push_back(big(x));
    return a;
}

ordered_json indices(const Family& f)
{
    auto a = ordered_json::array();
    for (auto i : f.members()) a.push_back(i);
    return a;
}

// ---------------------------------------------------------------- output

void flatten(const std::string& prefix, const ordered_json& j, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(prefix.empty() ? k : prefix + "." + k, v, out);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) flatten(prefix + "." + std::to_string(i++), v, out);
    } else {
        out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

/// CSV: a "rows" array of flat objects becomes a table, anything else key,value pairs.
void emit(const ordered_json& j, const Common& c)
{
    if (c.format == "json") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    if (j.contains("rows") && j["rows"].is_array() && !j["rows"].empty() && j["rows"][0].is_object()) {
        std::vector<std::string> header;
        for (const auto& [k, v] : j["rows"][0].items()) header.push_back(k);
        for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << csv_cell(header[i]);
        std::cout << '\n';
        for (const auto& row : j["rows"]) {
            for (std::size_t i = 0; i < header.size(); ++i) {
                const auto& v = row[header[i]];
                std::cout << (i ? "," : "") << csv_cell(v.is_string() ? v.get<std::string>() : v.dump());
            }
            std::cout << '\n';
        }
        return;
    }
    std::vector<std::pair<std::string, std::string>> kv;
    flatten("", j, kv);
    std::cout << "key,value\n";
    for (const auto& [k, v] : kv) std::cout << csv_cell(k) << ',' << csv_cell(v) << '\n';
}

// ---------------------------------------------------------------- families

GroundDescriptor ground_from_flag(std::string text)
{
    for (char& ch : text)
        if (ch == ',' || ch == ':') ch = ' ';
    return parse_ground(text);
}

FamilyFile load_family_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open family file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const auto j = ordered_json::parse(text);
        FamilyFile f;
        f.ground = ground_from_flag(j.at("ground").get<std::string>());
        const char* key = j.contains("members") ? "members" : "witness";
        f.indices = j.at(key).get<std::vector<std::size_t>>();
        return f;
    }
    std::istringstream is(text);
    return read_family(is);
}

GrassmannGround make_grassmann(const GroundDescriptor& d, const Caps& caps, unsigned workers)
{
    return enumerate_subspaces(d.n, d.k, d.q, caps, workers);
}

/// Calls fn(ground, family) with the ground named in the family file.
template <class Fn>
auto with_family(const std::string& path, const Caps& caps, unsigned workers, Fn fn)
{
    const auto file = load_family_file(path);
    if (file.ground.kind == GroundKind::grassmann) {
        const auto g = make_grassmann(file.ground, caps, workers);
        return fn(g, resolve_family(file, g));
    }
    const SymmetricGround g(file.ground.n, caps);
    return fn(g, resolve_family(file, g));
}

SchemeTables tables_for(const GrassmannGround& g, const Caps&) { return grassmann_tables(g.n(), g.k(), g.q()); }
SchemeTables tables_for(const SymmetricGround& g, const Caps& caps) { return conjugacy_tables(g.n(), caps); }

ordered_json tags_json(const WitnessTags& t, bool symmetric)
{
    ordered_json j{{"common_dim", t.common_dim}, {"in_t_star", t.in_t_star}, {"is_t_star", t.is_t_star}};
    if (symmetric) j["union_of_1_cosets"] = t.union_of_1_cosets;
    return j;
}

ordered_json bound_json(const BoundReport& r)
{
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    ordered_json j{{"bound", r.name}, {"params", params}, {"valid", r.valid}};
    if (r.valid) {
        j["value"] = big(r.value);
        j["approx"] = approx(r.value);
    }
    j["flags"] = r.flags;
    return j;
}

ordered_json report_json(const RunReport& r)
{
    ordered_json crit = ordered_json::array();
    for (const auto& c : r.criteria)
        crit.push_back({{"id", c.id}, {"title", c.title}, {"gating", c.gating}, {"pass", c.pass}, {"checks", c.checks},
                        {"failed", c.failed}, {"seconds", c.seconds}, {"limit_seconds", c.limit_seconds}});
    ordered_json rows = ordered_json::array();
    for (const auto& c : r.checks)
        rows.push_back({{"criterion", c.criterion}, {"name", c.name}, {"params", c.params}, {"expected", c.expected},
                        {"actual", c.actual}, {"pass", c.pass}});
    ordered_json data = ordered_json::array();
    for (const auto& d : r.data)
        data.push_back({{"criterion", d.criterion}, {"name", d.name}, {"params", d.params}, {"value", d.value}});
    return {{"suite", r.suite},
            {"pass", r.all_pass()},
            {"totals", {{"checks", r.checks.size()}, {"passed", r.passed()}, {"failed", r.failed()}}},
            {"seconds", r.seconds},
            {"criteria", crit},
            {"data", data},
            {"rows", rows}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Total intersection numbers, association-scheme tables and bounds for subspace and permutation families"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--workers", common.workers, "Worker threads for enumeration and search")->capture_default_str();

    int n = 0, k = 0, q = 2, t = 1, a0 = -1, a1 = -1;
    std::string m_text, s_text, rho_text, gen_text = "fewer:1", kind, scheme, family_path, ground_text, mode = "exhaustive",
                                             out_path, suite = "all", start_path;
    std::uint64_t budget = 0, seed = 1, max_steps = 10000, keep = 0;
    std::vector<int> coset_pairs;

    auto* qbinom = app.add_subcommand("qbinom", "Gaussian binomial [n k]_q");
    qbinom->add_option("-n", n)->required();
    qbinom->add_option("-k", k)->required();
    qbinom->add_option("-q", q)->capture_default_str();

    auto* derange = app.add_subcommand("derangement", "Derangement number d_n");
    derange->add_option("-n", n)->required();

    auto* star = app.add_subcommand("star-value", "I of the full t-star in G_q(n,k)");
    star->add_option("-n", n)->required();
    star->add_option("-k", k)->required();
    star->add_option("-t", t)->capture_default_str();
    star->add_option("-q", q)->capture_default_str();

    auto* t0 = app.add_subcommand("t0-value", "I of the coset construction T_0 from (a0,a1) or a size s");
    t0->add_option("-n", n)->required();
    auto* a0_opt = t0->add_option("--a0", a0);
    auto* a1_opt = t0->add_option("--a1", a1);
    auto* s_opt = t0->add_option("-s,--size", s_text);
    s_opt->excludes(a0_opt)->excludes(a1_opt);

    auto* bound = app.add_subcommand("bound", "Upper bound on MI");
    bound->add_option("--kind", kind, "grassmann-general | grassmann-refined | symmetric | grassmann-dual | lp-dual")
        ->required()
        ->check(CLI::IsMember({"grassmann-general", "grassmann-refined", "symmetric", "grassmann-dual", "lp-dual"}));
    bound->add_option("-n", n)->required();
    bound->add_option("-k", k);
    bound->add_option("-q", q)->capture_default_str();
    bound->add_option("-M", m_text, "Family size (grassmann-dual takes it from the family)");
    bound->add_option("--family-file", family_path, "Family for grassmann-dual");

    auto* eig = app.add_subcommand("eigenvalue", "Eigenvalue of the fixed-point Cayley graph on S_n at an irreducible");
    eig->add_option("-n", n)->required();
    eig->add_option("--rho", rho_text, "Partition, e.g. 4,1")->required();
    eig->add_option("--gen", gen_text, "fewer:K or exactly:K")->capture_default_str();

    auto* spec = app.add_subcommand("spectrum", "All eigenvalues of a fixed-point Cayley graph on S_n");
    spec->add_option("-n", n)->required();
    spec->add_option("--gen", gen_text, "fewer:K or exactly:K")->capture_default_str();

    auto* tables = app.add_subcommand("tables", "P and Q tables of an association scheme");
    tables->add_option("--scheme", scheme)->required()->check(CLI::IsMember({"grassmann", "conjugacy"}));
    tables->add_option("-n", n)->required();
    tables->add_option("-k", k);
    tables->add_option("-q", q)->capture_default_str();

    auto* inner = app.add_subcommand("inner-dist", "Inner distribution of a family");
    inner->add_option("--family-file", family_path)->required();
    auto* dual = app.add_subcommand("dual-dist", "Inner and dual distribution of a family");
    dual->add_option("--family-file", family_path)->required();

    auto* proj = app.add_subcommand("projection", "Projection of a permutation family onto U_0 + U_1, and the spectral identity");
    proj->add_option("--family-file", family_path)->required();

    auto* search = app.add_subcommand("search", "MI by exhaustive or local search");
    search->add_option("--ground", ground_text, "\"grassmann n k q\" or \"symmetric n\"")->required();
    search->add_option("--size,-M", m_text)->required();
    search->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "local"}))->capture_default_str();
    search->add_option("--budget", budget, "Maximum number of subsets (exhaustive)");
    search->add_option("--family-file", start_path, "Starting family (local)");
    search->add_option("--seed", seed, "Seed for the random starting family (local)")->capture_default_str();
    search->add_option("--max-steps", max_steps)->capture_default_str();
    search->add_option("--keep-optima", keep, "Return up to this many optimal families (exhaustive)")->capture_default_str();

    auto* construct = app.add_subcommand("construct", "Materialize a construction and compare closed-form and direct I");
    construct->add_option("--kind", kind, "t-star | t0 | coset | plane-star | solid-star | point-stabilizer")
        ->required()
        ->check(CLI::IsMember({"t-star", "t0", "coset", "plane-star", "solid-star", "point-stabilizer"}));
    construct->add_option("-n", n)->required();
    construct->add_option("-k", k);
    construct->add_option("-t", t)->capture_default_str();
    construct->add_option("-q", q)->capture_default_str();
    construct->add_option("-s,--size", s_text, "Family size (t0)");
    construct->add_option("--pairs", coset_pairs, "Coset pairs i1 j1 i2 j2 ... (1-based)");
    construct->add_option("--out", out_path, "Write the family in text format");

    auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
    verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        const Caps caps = Caps::from_env();
        const unsigned workers = std::max(1u, common.workers);
        auto parse_m = [&](const std::string& text) {
            if (text.empty()) throw std::invalid_argument("-M is required");
            return parse_bigint(text);
        };

        if (*qbinom) {
            emit({{"n", n}, {"k", k}, {"q", q}, {"value", big(gaussian_binomial(n, k, q))}}, common);
        } else if (*derange) {
            emit({{"n", n}, {"value", big(derangement(n))}}, common);
        } else if (*star) {
            emit({{"n", n}, {"k", k}, {"t", t}, {"q", q}, {"value", big(star_value(n, k, t, q))}}, common);
        } else if (*t0) {
            ordered_json j{{"n", n}};
            if (!s_text.empty()) {
                const auto sh = t0_shape(n, parse_bigint(s_text));
                if (sh.remainder != 0)
                    throw std::invalid_argument("size " + s_text + " is not a whole number of blocks; the closed form needs remainder 0");
                a0 = sh.a0;
                a1 = sh.a1;
                j["s"] = s_text;
            } else if (!*a0_opt || !*a1_opt) {
                throw std::invalid_argument("t0-value needs --a0 and --a1, or --size");
            }
            j["a0"] = a0;
            j["a1"] = a1;
            j["value"] = big(t0_value(n, a0, a1));
            emit(j, common);
        } else if (*bound) {
            if (kind == "symmetric") {
                emit(bound_json(bound_symmetric(n, parse_m(m_text))), common);
            } else if (kind == "grassmann-general") {
                emit(bound_json(bound_grassmann_general(n, k, q, parse_m(m_text))), common);
            } else if (kind == "grassmann-refined") {
                emit(bound_json(bound_grassmann_refined(n, k, q, parse_m(m_text))), common);
            } else if (kind == "lp-dual") {
                const BigInt m = parse_m(m_text);
                const auto lp = lp_dual_feasible_value(n, k, q, m);
                const BigRat value = bound_from_tail_lower_bound(n, k, q, m, lp.value);
                emit({{"bound", "lp_dual"},
                      {"params", {{"n", n}, {"k", k}, {"q", q}, {"M", to_string(m)}}},
                      {"x_k", big(lp.x_k)},
                      {"tail_lower_bound", big(lp.value)},
                      {"feasible", lp.feasible},
                      {"value", big(value)},
                      {"approx", approx(value)}},
                     common);
            } else {
                if (family_path.empty()) throw std::invalid_argument("grassmann-dual needs --family-file");
                const auto file = load_family_file(family_path);
                if (file.ground.kind != GroundKind::grassmann) throw std::invalid_argument("grassmann-dual needs a subspace family");
                const auto g = make_grassmann(file.ground, caps, workers);
                const auto f = resolve_family(file, g);
                const auto tb = grassmann_tables(g.n(), g.k(), g.q());
                const auto d = dual_distribution(tb, inner_distribution(tb, g, f), f.size());
                const auto b = bound_grassmann_dual_b1(g.n(), g.k(), g.q(), d, BigInt(f.size()));
                emit({{"bound", "grassmann_dual"},
                      {"ground", g.descriptor().str()},
                      {"M", f.size()},
                      {"b", big_list(d.b)},
                      {"from_b1", big(b.from_b1)},
                      {"from_tail", big(b.from_tail)},
                      {"direct", big(total_intersection(g, f))}},
                     common);
            }
        } else if (*eig) {
            const auto gen = parse_generator(gen_text);
            const auto rho = parse_partition(rho_text);
            if (rho.size() != n) throw std::invalid_argument("--rho must be a partition of n");
            const auto v = eigenvalue(n, rho, gen, caps);
            emit({{"n", n}, {"rho", rho.str()}, {"gen", gen.str()}, {"value", big(v)}}, common);
        } else if (*spec) {
            const auto gen = parse_generator(gen_text);
            ordered_json rows = ordered_json::array();
            for (const auto& [rho, v] : spectrum(n, gen, caps))
                rows.push_back({{"rho", rho.str()}, {"dim", big(dim_irrep(rho))}, {"eigenvalue", big(v)}});
            emit({{"n", n}, {"gen", gen.str()}, {"degree", big(generator_size(n, gen))}, {"rows", rows}}, common);
        } else if (*tables) {
            const auto tb = scheme == "grassmann" ? grassmann_tables(n, k, q) : conjugacy_tables(n, caps);
            ordered_json P = ordered_json::array(), Q = ordered_json::array();
            for (const auto& row : tb.P) P.push_back(big_list(row));
            for (const auto& row : tb.Q) Q.push_back(big_list(row));
            emit({{"scheme", tb.scheme},
                  {"ground", tb.ground.str()},
                  {"classes", tb.classes},
                  {"v", big(tb.v)},
                  {"relations", tb.relation_labels},
                  {"eigenspaces", tb.eigenspace_labels},
                  {"valencies", big_list(tb.valencies)},
                  {"multiplicities", big_list(tb.multiplicities)},
                  {"P", P},
                  {"Q", Q}},
                 common);
        } else if (*inner || *dual) {
            const bool want_dual = dual->parsed();
            with_family(family_path, caps, workers, [&](const auto& g, const Family& f) {
                const auto tb = tables_for(g, caps);
                const auto a = inner_distribution(tb, g, f);
                ordered_json j{{"scheme", tb.scheme}, {"ground", g.descriptor().str()}, {"M", f.size()}, {"relations", tb.relation_labels},
                               {"a", big_list(a.a)}};
                if (want_dual) {
                    j["eigenspaces"] = tb.eigenspace_labels;
                    j["b"] = big_list(dual_distribution(tb, a, f.size()).b);
                }
                j["I"] = big(total_intersection(g, f));
                emit(j, common);
                return 0;
            });
        } else if (*proj) {
            const auto file = load_family_file(family_path);
            if (file.ground.kind != GroundKind::symmetric) throw std::invalid_argument("projection needs a permutation family");
            const SymmetricGround g(file.ground.n, caps);
            const auto f = resolve_family(file, g);
            const auto r = projection_report(g, f, caps);
            const auto id = spectral_identity_check(g, f, caps);
            emit({{"n", r.n},
                  {"M", r.m},
                  {"norm_f", big(r.norm_f)},
                  {"norm_f0", big(r.norm_f0)},
                  {"norm_f1", big(r.norm_f1)},
                  {"norm_f2", big(r.norm_f2)},
                  {"quadratic_forms", big_list(r.quad_forms)},
                  {"overlap_histogram", big_list(r.overlap_histogram)},
                  {"I", big(id.direct)},
                  {"I_adjacency", big(id.adjacency)},
                  {"I_projection", big(id.projection)},
                  {"identity_holds", id.holds()}},
                 common);
        } else if (*search) {
            const auto desc = ground_from_flag(ground_text);
            const auto m = to_int64(parse_m(m_text));
            if (m < 0) throw std::invalid_argument("--size must be non-negative");
            SearchOptions so;
            so.workers = workers;
            so.budget = budget ? budget : caps.search_budget;
            so.keep_optima = keep;
            auto run = [&](const auto& g) {
                std::optional<Family> start;
                if (!start_path.empty()) start = resolve_family(load_family_file(start_path), g);
                const auto r = mode == "exhaustive" ? brute_force_mi(g, static_cast<std::size_t>(m), so, caps)
                                                    : local_search_mi(g, static_cast<std::size_t>(m), start, seed, max_steps, caps);
                ordered_json j{{"ground", g.descriptor().str()}, {"M", m}, {"mode", mode}, {"mi", big(r.best)}, {"exhaustive", r.exhaustive}};
                if (r.exhaustive) {
                    j["optima_count"] = r.optima_count;
                    j["optima_count_capped"] = r.count_capped;
                } else {
                    j["steps"] = r.steps;
                }
                j["witness"] = indices(r.witness);
                j["tags"] = tags_json(classify_witness(g, r.witness), desc.kind == GroundKind::symmetric);
                if (!r.optima.empty()) {
                    ordered_json all = ordered_json::array();
                    for (const auto& f : r.optima) all.push_back(indices(f));
                    j["optima"] = all;
                }
                emit(j, common);
                return 0;
            };
            if (desc.kind == GroundKind::grassmann) run(make_grassmann(desc, caps, workers));
            else run(SymmetricGround(desc.n, caps));
        } else if (*construct) {
            ordered_json j{{"construction", kind}};
            auto finish = [&](const auto& g, const Family& f, const std::optional<BigInt>& closed) {
                const BigInt direct = total_intersection(g, f);
                j["ground"] = g.descriptor().str();
                j["M"] = f.size();
                if (closed) j["closed_form"] = big(*closed);
                j["direct"] = big(direct);
                if (closed) j["agree"] = *closed == direct;
                j["members"] = indices(f);
                if (!out_path.empty()) {
                    std::ofstream os(out_path);
                    if (!os) throw std::invalid_argument("cannot write '" + out_path + "'");
                    write_family(os, g, f);
                    j["file"] = out_path;
                }
                emit(j, common);
            };
            if (kind == "t-star" || kind == "plane-star" || kind == "solid-star") {
                if (kind == "plane-star") k = 2, t = 1;
                if (kind == "solid-star") k = 3, t = 2;
                const auto g = make_grassmann(GroundDescriptor::grassmann(n, k, q), detail::without_table(caps), workers);
                const auto f = full_t_star(g, detail::coordinate_subspace(n, t, q));
                j["params"] = {{"n", n}, {"k", k}, {"t", t}, {"q", q}};
                std::optional<BigInt> closed = star_value(n, k, t, q);
                if (kind == "plane-star") j["mi_value"] = big(mi_closed_form(Construction::plane_star, n, q).value);
                if (kind == "solid-star" && n >= 6) j["mi_value"] = big(mi_closed_form(Construction::solid_star, n, q).value);
                finish(g, f, closed);
            } else {
                const SymmetricGround g(n, caps);
                if (kind == "point-stabilizer") {
                    j["params"] = {{"n", n}};
                    j["mi_value"] = big(mi_closed_form(Construction::point_stabilizer, n).value);
                    finish(g, coset_family(g, CosetSpec({{1, 1}})), t0_value(n, 1, 0));
                } else if (kind == "coset") {
                    if (coset_pairs.size() % 2) throw std::invalid_argument("--pairs needs an even number of values");
                    std::vector<std::pair<int, int>> pairs;
                    for (std::size_t i = 0; i < coset_pairs.size(); i += 2) pairs.emplace_back(coset_pairs[i], coset_pairs[i + 1]);
                    j["params"] = {{"n", n}, {"pairs", coset_pairs}};
                    finish(g, coset_family(g, CosetSpec(pairs)), std::nullopt);
                } else {
                    if (s_text.empty()) throw std::invalid_argument("t0 needs --size");
                    const BigInt s = parse_bigint(s_text);
                    const auto f = t0_family(g, s);
                    const auto sh = t0_shape(n, s);
                    j["params"] = {{"n", n}, {"s", s_text}, {"a0", sh.a0}, {"a1", sh.a1}, {"padding", to_string(sh.remainder)}};
                    std::optional<BigInt> closed;
                    if (sh.remainder == 0 && n >= 3 && sh.a0 <= n - 1) closed = t0_value(n, sh.a0, sh.a1);
                    finish(g, f, closed);
                }
            }
        } else if (*verify) {
            VerifyOptions vo;
            vo.workers = workers;
            vo.caps = caps;
            const auto r = run_suite(suite, vo, [](const CriterionSummary& s) {
                std::cerr << (s.gating ? (s.pass ? "PASS " : "FAIL ") : (s.pass ? "DATA " : "FAIL ")) << s.id << " (" << s.seconds << " s)\n";
            });
            emit(report_json(r), common);
            if (r.cap_refused) return exit_cap;
            return r.all_pass() ? exit_ok : exit_verify;
        }
    } catch (const size_limit_error& e) {
        std::cerr << "ekr: refused: " << e.what() << '\n';
        return exit_cap;
    } catch (const consistency_error& e) {
        std::cerr << "ekr: consistency check failed: " << e.what() << '\n';
        return exit_verify;
    } catch (const std::exception& e) {
        std::cerr << "ekr: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}
