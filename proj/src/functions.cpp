#include "gft/functions.hpp"

#include <cmath>
#include <sstream>

#include "gft/audit.hpp"

namespace gft::functions {

namespace {

std::vector<double> parse_args(const std::string& s, std::size_t colon) {
    std::vector<double> out;
    if (colon == std::string::npos) return out;
    std::stringstream ss(s.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw DomainError("function spec: bad numeric argument '" + item + "'");
        }
    }
    return out;
}

} // namespace

NamedFunction deformed_gaussian(const DeformParams& params, double a) {
    if (!(a > 0.0)) throw ParamError("gaussian: rate must be positive");
    const int n = params.n;
    const double c = n * a;     // f = e^{-c |x|^q}, q = 2/n
    const double q = 2.0 / n;
    const double k = params.k;
    NamedFunction f;
    f.name = "gaussian:" + std::to_string(a);
    f.profile = transform::Profile(
        [c, q](double x) -> std::complex<double> {
            return std::exp(-c * std::pow(std::abs(x), q));
        },
        a);
    // Δ_k f = [c²q²|x|^{2q-2} - c q (q - 1 + 2k)|x|^{q-2}] f for the even family
    f.dunkl = [c, q, k](double x) -> std::complex<double> {
        if (x == 0.0) throw SingularPointError("dunkl: x = 0");
        const double ax = std::abs(x);
        const double fx = std::exp(-c * std::pow(ax, q));
        return (c * c * q * q * std::pow(ax, 2.0 * q - 2.0) -
                c * q * (q - 1.0 + 2.0 * k) * std::pow(ax, q - 2.0)) *
               fx;
    };
    return f;
}

NamedFunction parse_function(const std::string& spec,
                             const DeformParams& params) {
    const std::size_t colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const auto args = parse_args(spec, colon);

    if (head == "gaussian") {
        if (args.size() != 1)
            throw DomainError("gaussian:<a> takes one argument");
        return deformed_gaussian(params, args[0]);
    }
    if (head == "bump") {
        if (args.size() != 1 || !(args[0] > 0.0))
            throw DomainError("bump:<r> takes one positive argument");
        const double r = args[0];
        NamedFunction f;
        f.name = "bump:" + std::to_string(r);
        f.profile.fn = [r](double x) -> std::complex<double> {
            if (std::abs(x) >= r) return 0.0;
            return std::exp(-r * r / (r * r - x * x));
        };
        f.profile.support_radius = r;
        return f;
    }
    if (head == "hermite1") {
        if (!args.empty()) throw DomainError("hermite1 takes no arguments");
        NamedFunction f;
        f.name = "hermite1";
        f.profile.fn = [](double x) -> std::complex<double> {
            return x * std::exp(-0.5 * x * x);
        };
        // e^{-x²/2} = e^{-n a |x|^{2/n}} at a = 1/2 for n = 1; faster than any
        // member of the family for n >= 2, so 0.5 is a safe radius hint
        f.profile.decay_rate = 0.5;
        return f;
    }
    if (head == "oddgauss") {
        if (!args.empty()) throw DomainError("oddgauss takes no arguments");
        NamedFunction f;
        f.name = "oddgauss";
        f.profile.fn = [](double x) -> std::complex<double> {
            return x * std::exp(-x * x);
        };
        f.profile.decay_rate = (params.n == 1) ? 1.0 : 0.5;
        return f;
    }
    if (head == "counterexample") {
        if (args.size() != 3)
            throw DomainError("counterexample:<a>,<b>,<delta> takes three arguments");
        NamedFunction f;
        f.name = spec;
        f.profile = audit::counterexample_family(params, args[0], args[1], args[2]);
        const double delta = args[2];
        NamedFunction g = deformed_gaussian(params, delta);
        f.dunkl = g.dunkl;
        return f;
    }
    throw DomainError("unknown function spec '" + spec + "'");
}

std::vector<NamedFunction> test_basket(const DeformParams& params) {
    std::vector<NamedFunction> basket;
    basket.push_back(deformed_gaussian(params, 0.3));
    basket.push_back(deformed_gaussian(params, 0.5));
    basket.push_back(deformed_gaussian(params, 1.0));
    basket.push_back(parse_function("bump:2", params));
    basket.push_back(parse_function("oddgauss", params));
    return basket;
}

heat::DifferentiableProfile differentiable(const NamedFunction& f,
                                           const DeformParams& params) {
    if (f.dunkl) return {f.profile, *f.dunkl};
    return heat::with_fd_laplacian(params, f.profile);
}

} // namespace gft::functions
