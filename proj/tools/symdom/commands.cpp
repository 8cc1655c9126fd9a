#include "commands.hpp"

#include "symdom/checks.hpp"
#include "symdom/json_io.hpp"
#include "symdom/kernels.hpp"
#include "symdom/positivity.hpp"

#include <sstream>

namespace symdom::cli {

namespace {

std::string trim(std::string s)
{
    auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && issp(static_cast<unsigned char>(s.back())))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && issp(static_cast<unsigned char>(s[i])))
        ++i;
    return s.substr(i);
}

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!trim(item).empty())
            out.push_back(trim(item));
    return out;
}

double to_double(const std::string& s)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size())
        throw UsageError("not a number: '" + s + "'");
    return v;
}

Complex parse_complex(const std::string& raw)
{
    std::string s = trim(raw);
    if (s.empty())
        throw UsageError("empty complex entry");
    if (s.back() != 'i')
        return {to_double(s), 0.0};
    s.pop_back();
    // Split at the last sign that is not a leading sign or part of an exponent.
    std::size_t cut = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            cut = k;
            break;
        }
    if (cut == std::string::npos) {
        if (s.empty() || s == "+")
            return {0.0, 1.0};
        if (s == "-")
            return {0.0, -1.0};
        return {0.0, to_double(s)};
    }
    std::string im = s.substr(cut);
    double imv = im == "+" ? 1.0 : im == "-" ? -1.0 : to_double(im);
    return {to_double(s.substr(0, cut)), imv};
}

Vec point(const std::string& s, int d, const char* name)
{
    auto v = parse_complex_list(s);
    if (static_cast<int>(v.size()) != d)
        throw UsageError(std::string("--") + name + " needs " + std::to_string(d) + " entries");
    Vec out(d);
    for (int i = 0; i < d; ++i)
        out(i) = v[static_cast<std::size_t>(i)];
    return out;
}

std::string num(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

nlohmann::json psd_json(const PsdResult& r)
{
    return {{"verdict", to_string(r.verdict)},
            {"min_eig", json_number(r.min_eig)},
            {"max_eig", json_number(r.max_eig)},
            {"hermitian_defect", json_number(r.hermitian_defect)}};
}

BigKernelParams big_params(const RunConfig& cfg)
{
    BigKernelParams p{cfg.d, cfg.nu, cfg.n, cfg.weights()};
    p.validate();
    return p;
}

KappaVariant variant(const RunConfig& cfg)
{
    try {
        return kappa_variant_from_string(cfg.variant);
    } catch (const std::exception&) {
        throw UsageError("--variant must be theorem, proof or both");
    }
}

}  // namespace

std::vector<double> parse_real_list(const std::string& s)
{
    std::vector<double> out;
    for (const auto& t : split(s))
        out.push_back(to_double(t));
    return out;
}

std::vector<Complex> parse_complex_list(const std::string& s)
{
    std::vector<Complex> out;
    for (const auto& t : split(s))
        out.push_back(parse_complex(t));
    return out;
}

void RunConfig::validate() const
{
    if (d <= 0)
        throw UsageError("--d must be positive");
    if (n < 0)
        throw UsageError("--n must be non-negative");
    if (lambda < 0)
        throw UsageError("--lambda must be non-negative");
    if (!(tol > 0.0) || !(tol_psd > 0.0))
        throw UsageError("tolerances must be positive");
    if (!(radius > 0.0) || !(radius < 1.0))
        throw UsageError("--radius must lie in (0, 1)");
    if (samples <= 0)
        throw UsageError("--samples must be positive");
    if (cap < 0 || N < 0)
        throw UsageError("--cap and --N must be non-negative");
    if (format != "json" && format != "csv")
        throw UsageError("--format must be json or csv");
}

nlohmann::json RunConfig::to_json() const
{
    nlohmann::json j = {{"command", command}, {"d", d},         {"nu", nu},           {"n", n},
                        {"lambda", lambda},   {"samples", samples}, {"radius", radius}, {"tol", tol},
                        {"tol_psd", tol_psd}, {"cap", cap},     {"N", N},             {"variant", variant},
                        {"format", format},   {"space", space}};
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    j["c"] = weights();
    if (command.rfind("scan", 0) == 0) {
        j["b"] = b;
        j["nu_min"] = nu_min;
        j["nu_max"] = nu_max;
        j["step"] = step;
        j["nu_star"] = nu_star;
    }
    if (command.rfind("probe", 0) == 0) {
        j["family"] = family;
        j["beta"] = beta;
        j["unconstrained"] = unconstrained;
    }
    if (quick)
        j["quick"] = true;
    return j;
}

std::uint64_t RunConfig::require_seed() const
{
    if (!seed)
        throw UsageError("this command is randomized; pass --seed");
    return *seed;
}

std::vector<double> RunConfig::weights() const
{
    if (c.empty())
        return std::vector<double>(static_cast<std::size_t>(n) + 1, 1.0);
    auto w = parse_real_list(c);
    if (static_cast<int>(w.size()) != n + 1)
        throw UsageError("--c needs n+1 = " + std::to_string(n + 1) + " entries");
    return w;
}

Report cmd_eval(const RunConfig& cfg, const std::string& what)
{
    Report r;
    if (what == "little-kernel") {
        LittleKernelParams p{cfg.d, cfg.nu, cfg.lambda};
        Complex v = little_kernel(p, point(cfg.z, cfg.d, "z"), point(cfg.w, cfg.d, "w"), point(cfg.zeta, cfg.d, "zeta"),
                                  point(cfg.omega, cfg.d, "omega"));
        r.values["value"] = complex_json(v);
    } else if (what == "big-kernel") {
        auto p = big_params(cfg);
        Vec z = point(cfg.z, cfg.d, "z"), w = point(cfg.w, cfg.d, "w");
        Vec zeta = point(cfg.zeta, cfg.d, "zeta"), omega = point(cfg.omega, cfg.d, "omega");
        r.values["value"] = complex_json(big_kernel_closed(p, z, w, zeta, omega));
        if (cfg.cap > 0) {
            BigKernel K(p, cfg.cap);
            auto v = K.eval(z, w, zeta, omega);
            r.values["truncated"] = {{"cap", cfg.cap}, {"value", complex_json(v.value)},
                                     {"tail_bound", json_number(v.tail_bound)}};
        }
    } else if (what == "kappa") {
        std::vector<KappaVariant> vs;
        if (cfg.variant == "both")
            vs = {KappaVariant::Theorem, KappaVariant::Proof};
        else
            vs = {variant(cfg)};
        for (auto v : vs) {
            Eigen::MatrixXd K = kappa_matrix(cfg.nu, cfg.n, v);
            nlohmann::json rows = nlohmann::json::array();
            for (int i = 0; i < K.rows(); ++i) {
                std::vector<double> row;
                for (int j = 0; j < K.cols(); ++j)
                    row.push_back(K(i, j));
                rows.push_back(row);
            }
            r.values["kappa"][to_string(v)] = rows;
        }
        r.checks.push_back(check_kappa(big_params(cfg), cfg.tol));
    } else if (what == "fk") {
        r.values["coefficients"] = fk_expand(cfg.nu, cfg.N);
    } else if (what == "intertwiner") {
        if (cfg.lambda > cfg.n)
            throw UsageError("--lambda must not exceed --n");
        auto mu = intertwiner_coeffs(cfg.nu, cfg.n, cfg.lambda);
        r.values["mu"] = mu.mu;
        if (!cfg.z.empty()) {
            // Value on the kernel vector K_w E^lambda_omega.
            Vec omega = point(cfg.omega, cfg.d, "omega");
            CPolynomial q = e_kernel_poly(cfg.lambda, omega);
            r.values["value"] = complex_json(intertwiner_on_kernel(cfg.nu, cfg.n, point(cfg.w, cfg.d, "w"), q,
                                                                   point(cfg.z, cfg.d, "z"),
                                                                   point(cfg.zeta, cfg.d, "zeta")));
        }
    } else {
        throw UsageError("unknown eval target '" + what + "'");
    }
    return r;
}

Report cmd_check(const RunConfig& cfg, const std::string& what)
{
    Report r;
    auto covariance = [&](std::uint64_t seed, int samples) {
        Rng rng(seed);
        if (cfg.space == "little") {
            LittleKernelParams p{cfg.d, cfg.nu, cfg.lambda};
            Vec x = random_ball_point(rng, cfg.d, cfg.radius);
            r.checks.push_back(check_little_covariance(p, x, {samples, seed, cfg.radius, 1.0}, cfg.tol));
        } else if (cfg.space == "big") {
            Vec x = random_ball_point(rng, cfg.d, std::min(cfg.radius, 0.6));
            r.checks.push_back(check_big_covariance(big_params(cfg), x,
                                                    {samples, seed, std::min(cfg.radius, 0.5), 0.2}, cfg.tol));
        } else {
            throw UsageError("--space must be little or big");
        }
    };
    if (what == "covariance") {
        covariance(cfg.require_seed(), cfg.samples);
    } else if (what == "reproducing") {
        r.checks.push_back(check_reproducing({cfg.d, cfg.nu, cfg.lambda}, cfg.cap, cfg.samples, cfg.require_seed(),
                                             std::min(cfg.tol, 1e-9)));
    } else if (what == "factorization") {
        r.checks.push_back(check_factorization(cfg.d, cfg.n, cfg.samples, cfg.require_seed(), std::min(cfg.tol, 1e-9)));
    } else if (what == "intertwiner") {
        if (cfg.lambda > cfg.n)
            throw UsageError("--lambda must not exceed --n");
        r.checks.push_back(check_intertwiner_on_kernel({cfg.d, cfg.nu, cfg.lambda}, cfg.n, cfg.samples,
                                                       cfg.require_seed(), std::min(cfg.tol, 1e-9)));
    } else if (what == "intertwining") {
        if (cfg.lambda > cfg.n)
            throw UsageError("--lambda must not exceed --n");
        r.checks.push_back(check_intertwining(big_params(cfg), cfg.lambda, cfg.samples, cfg.require_seed(), cfg.tol));
    } else if (what == "kappa") {
        r.checks.push_back(check_kappa(big_params(cfg), std::min(cfg.tol, 1e-10)));
    } else if (what == "all") {
        const std::uint64_t seed = cfg.seed.value_or(7);
        const int samples = cfg.quick ? 3 : 20;
        for (int lambda = 0; lambda <= 2; ++lambda) {
            Rng rng(seed + static_cast<std::uint64_t>(lambda));
            LittleKernelParams p{2, 4.0, lambda};
            r.checks.push_back(
                check_little_covariance(p, random_ball_point(rng, 2, 0.8), {samples, seed, 0.8, 1.0}, 1e-8));
            r.checks.push_back(check_reproducing(p, cfg.quick ? 2 : 4, cfg.quick ? 2 : 6, seed, 1e-9));
        }
        BigKernelParams bp{2, 4.0, 2, {1.0, 1.0, 1.0}};
        {
            Rng rng(seed);
            r.checks.push_back(check_big_covariance(bp, random_ball_point(rng, 2, 0.6), {samples, seed, 0.5, 0.2}, 1e-8));
        }
        for (int n = 0; n <= 3; ++n)
            r.checks.push_back(check_factorization(2, n, cfg.quick ? 3 : 10, seed, 1e-9));
        for (int lambda = 0; lambda <= 2; ++lambda) {
            r.checks.push_back(check_intertwiner_on_kernel({2, 4.0, lambda}, 2, samples, seed, 1e-9));
            r.checks.push_back(check_intertwining(bp, lambda, cfg.quick ? 3 : 10, seed, 1e-8));
        }
        r.checks.push_back(check_kappa(bp, 1e-10));
        r.checks.push_back(check_kappa({1, 2.5, 1, {0.7, 1.3}}, 1e-10));
    } else {
        throw UsageError("unknown check '" + what + "'");
    }
    return r;
}

Report cmd_scan(const RunConfig& cfg, const std::string& what)
{
    Report r;
    if (what == "wallach") {
        std::vector<double> grid;
        try {
            grid = make_grid(cfg.nu_min, cfg.nu_max, cfg.step);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        GramSpec spec{sample_jet_points(cfg.d, std::max(cfg.samples, 40), cfg.radius, 1.0, cfg.require_seed()),
                      cfg.tol_psd};
        auto scan = wallach_scan(cfg.d, cfg.lambda, grid, spec);
        r.csv.push_back({"nu", "verdict", "min_eig", "max_eig"});
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& pt : scan.points) {
            auto j = psd_json(pt.result);
            j["nu"] = pt.nu;
            rows.push_back(j);
            r.csv.push_back({num(pt.nu), to_string(pt.result.verdict), num(pt.result.min_eig), num(pt.result.max_eig)});
        }
        r.values["points"] = rows;
    } else if (what == "bounded") {
        auto bs = parse_real_list(cfg.b);
        if (bs.empty())
            throw UsageError("--b needs at least one value");
        auto p = big_params(cfg);
        GramSpec spec{sample_jet_points(cfg.d, std::max(cfg.samples, 30), std::min(cfg.radius, 0.6), 0.2,
                                        cfg.seed.value_or(7)),
                      cfg.tol_psd};
        DoubledKernel K = [&](const Vec& z, const Vec& zeta, const Vec& w, const Vec& omega) {
            return big_kernel_closed(p, z, w, zeta, omega);
        };
        r.csv.push_back({"b", "verdict", "min_eig", "scalar_min_coeff"});
        nlohmann::json rows = nlohmann::json::array();
        for (double b : bs) {
            auto res = boundedness_kernel_check(K, b, spec);
            auto coeffs = scalar_bound_coeffs(cfg.nu, b, 200);
            double lo = *std::min_element(coeffs.begin(), coeffs.end());
            auto j = psd_json(res);
            j["b"] = b;
            j["scalar_min_coeff"] = json_number(lo);
            rows.push_back(j);
            r.csv.push_back({num(b), to_string(res.verdict), num(res.min_eig), num(lo)});
        }
        r.values["points"] = rows;
    } else if (what == "weights") {
        auto w = weight_transfer(cfg.nu, cfg.nu_star, cfg.n, cfg.weights(), variant(cfg));
        r.values["c_prime"] = w.c_prime;
        r.values["member"] = w.member;
        r.csv.push_back({"lambda", "c", "c_prime"});
        auto c = cfg.weights();
        for (std::size_t i = 0; i < w.c_prime.size(); ++i)
            r.csv.push_back({std::to_string(i), num(c[i]), num(w.c_prime[i])});
    } else {
        throw UsageError("unknown scan '" + what + "'");
    }
    return r;
}

Report cmd_probe(const RunConfig& cfg, const std::string& what)
{
    if (what != "commutant")
        throw UsageError("unknown probe '" + what + "'");
    Report r;
    CommutantSpec spec;
    spec.d = cfg.d;
    spec.n = cfg.n;
    spec.nu = cfg.nu;
    spec.c = cfg.weights();
    spec.samples = cfg.samples;
    spec.seed = cfg.require_seed();
    spec.radius = cfg.radius;
    spec.variant = variant(cfg);
    spec.block_scalar = !cfg.unconstrained;
    if (cfg.family == "full")
        spec.family = CommutantFamily::Full;
    else if (cfg.family == "identity-only")
        spec.family = CommutantFamily::IdentityOnly;
    else
        throw UsageError("--family must be full or identity-only");
    if (cfg.beta == "fock")
        spec.beta = FibreMetric::fock(cfg.n);
    else if (cfg.beta == "u-invariant")
        spec.beta = u_invariant_weights(cfg.n, cfg.d);
    else {
        spec.beta.beta = parse_real_list(cfg.beta);
        if (static_cast<int>(spec.beta.beta.size()) != cfg.n + 1)
            throw UsageError("--beta needs n+1 entries, or fock / u-invariant");
    }
    auto res = commutant_probe(spec);
    r.values = {{"dimension", res.dimension},
                {"unknowns", res.unknowns},
                {"family_size", res.family_size},
                {"condition", json_number(res.condition)},
                {"singular_values", res.singular_values},
                {"basis", matrix_json(res.basis)}};
    if (cfg.expect_irreducible) {
        CheckRecord c;
        c.name = "irreducible";
        c.anchor = "commutant of the sampled family is the scalars";
        c.max_error = std::abs(res.dimension - 1);
        c.tol = 0.0;
        c.pass = res.dimension == 1;
        c.details = {{"dimension", res.dimension}};
        r.checks.push_back(c);
    }
    return r;
}

}  // namespace symdom::cli
