#include "fmgl/funcspec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fmgl/csv.hpp"
#include "fmgl/errors.hpp"

namespace fmgl {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();

// 2nd-order central binomial stencil for the k-th derivative (half-integer
// offsets when k is odd).
double central_stencil(const std::function<double(double)>& f, double t, int k, double h) {
    double sum = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= k; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binom * f(t + (0.5 * k - i) * h);
        binom = binom * (k - i) / (i + 1.0);
    }
    return sum / std::pow(h, k);
}
}  // namespace

double finite_difference(const std::function<double(double)>& f, double t, int k) {
    if (k == 0) {
        return f(t);
    }
    // Richardson pair of the 2nd-order stencil -> 4th order; step balances
    // the 2^k-term roundoff against the h^4 truncation.
    const double scale = std::max(1.0, std::fabs(t));
    const double h = std::pow(std::ldexp(kEps, 2 * k), 1.0 / (k + 4)) * scale;
    const double coarse = central_stencil(f, t, k, h);
    const double fine = central_stencil(f, t, k, 0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

double finite_difference_error_estimate(int k, double scale) {
    if (k == 0) {
        return 0.0;
    }
    return 20.0 * std::pow(kEps, 4.0 / (k + 4)) * scale;
}

struct FunctionSpec::Impl {
    Kind kind = Kind::Catalog;
    std::optional<Catalog> cat;

    int n = 0;                        // Power exponent
    double c = 0.0;                   // Constant value
    std::vector<double> coeffs;       // Polynomial t^k coeffs, or Fourier sin coeffs
    std::vector<double> cos_coeffs;   // Fourier cos coeffs

    expr::NodePtr ast;                // Expression
    std::string src;

    std::shared_ptr<const Impl> fd_base;  // non-null: finite-difference wrapper
    int fd_order = 0;

    std::vector<double> ts, values;   // Samples
};

namespace {

double eval_impl(const FunctionSpec::Impl& impl, double t);

double eval_samples(const FunctionSpec::Impl& impl, double t) {
    const auto& ts = impl.ts;
    const auto& vs = impl.values;
    const double slack = 1e-9 * (1.0 + std::fabs(ts.front()) + std::fabs(ts.back()));
    if (t < ts.front() - slack || t > ts.back() + slack) {
        std::ostringstream msg;
        msg << "sample query t = " << t << " outside grid hull [" << ts.front()
            << ", " << ts.back() << "]";
        throw DomainError(msg.str());
    }
    const double tc = std::clamp(t, ts.front(), ts.back());
    auto it = std::upper_bound(ts.begin(), ts.end(), tc);
    std::size_t i = (it == ts.begin()) ? 0 : static_cast<std::size_t>(it - ts.begin()) - 1;
    if (i + 1 >= ts.size()) {
        i = ts.size() - 2;
    }
    const double u = (tc - ts[i]) / (ts[i + 1] - ts[i]);
    return vs[i] + u * (vs[i + 1] - vs[i]);
}

double eval_impl(const FunctionSpec::Impl& impl, double t) {
    if (impl.fd_base) {
        const auto base = impl.fd_base;
        return finite_difference([base](double x) { return eval_impl(*base, x); }, t,
                                 impl.fd_order);
    }
    switch (impl.kind) {
    case FunctionSpec::Kind::Expression:
        return expr::eval(*impl.ast, t);
    case FunctionSpec::Kind::Samples:
        return eval_samples(impl, t);
    case FunctionSpec::Kind::Catalog:
        break;
    }
    switch (*impl.cat) {
    case Catalog::Sine:
        return std::sin(t);
    case Catalog::Cosine:
        return std::cos(t);
    case Catalog::Exponential:
        return std::exp(t);
    case Catalog::Power:
        return std::pow(t, impl.n);
    case Catalog::Constant:
        return impl.c;
    case Catalog::Fourier: {
        double sum = 0.0;
        for (std::size_t j = 0; j < impl.coeffs.size(); ++j) {
            if (impl.coeffs[j] != 0.0) {
                sum += impl.coeffs[j] * std::sin((j + 1.0) * t);
            }
        }
        for (std::size_t j = 0; j < impl.cos_coeffs.size(); ++j) {
            if (impl.cos_coeffs[j] != 0.0) {
                sum += impl.cos_coeffs[j] * std::cos((j + 1.0) * t);
            }
        }
        return sum;
    }
    case Catalog::Polynomial: {
        double acc = 0.0;
        for (std::size_t j = impl.coeffs.size(); j-- > 0;) {
            acc = acc * t + impl.coeffs[j];
        }
        return acc;
    }
    }
    throw std::logic_error("FunctionSpec: malformed impl");
}

}  // namespace

FunctionSpec::FunctionSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

double FunctionSpec::operator()(double t) const { return eval_impl(*impl_, t); }

FunctionSpec::Kind FunctionSpec::kind() const { return impl_->kind; }

std::optional<Catalog> FunctionSpec::catalog() const { return impl_->cat; }

bool FunctionSpec::has_analytic_derivatives() const {
    return impl_->kind == Kind::Catalog && !impl_->fd_base;
}

int FunctionSpec::power_exponent() const { return impl_->n; }
double FunctionSpec::constant_value() const { return impl_->c; }
const std::vector<double>& FunctionSpec::poly_coeffs() const { return impl_->coeffs; }
const std::vector<double>& FunctionSpec::fourier_sin_coeffs() const { return impl_->coeffs; }
const std::vector<double>& FunctionSpec::fourier_cos_coeffs() const { return impl_->cos_coeffs; }
expr::NodePtr FunctionSpec::ast() const { return impl_->ast; }

FunctionSpec FunctionSpec::derivative(int order) const {
    if (order < 0) {
        throw std::invalid_argument("derivative order must be >= 0");
    }
    if (order == 0) {
        return *this;
    }
    if (!has_analytic_derivatives()) {
        // finite-difference wrapper; repeated wrapping accumulates the order
        auto impl = std::make_shared<Impl>();
        if (impl_->fd_base) {
            impl->kind = impl_->kind;
            impl->fd_base = impl_->fd_base;
            impl->fd_order = impl_->fd_order + order;
        } else {
            impl->kind = impl_->kind;
            impl->fd_base = impl_;
            impl->fd_order = order;
        }
        return FunctionSpec(impl);
    }
    switch (*impl_->cat) {
    case Catalog::Sine:
        switch (order % 4) {
        case 0: return sine();
        case 1: return cosine();
        case 2: return fourier({-1.0}, {});
        default: return fourier({}, {-1.0});
        }
    case Catalog::Cosine:
        switch (order % 4) {
        case 0: return cosine();
        case 1: return fourier({-1.0}, {});
        case 2: return fourier({}, {-1.0});
        default: return sine();
        }
    case Catalog::Exponential:
        return exponential();
    case Catalog::Constant:
        return constant(0.0);
    case Catalog::Power: {
        if (order > impl_->n) {
            return constant(0.0);
        }
        double falling = 1.0;
        for (int i = 0; i < order; ++i) {
            falling *= impl_->n - i;
        }
        if (order == impl_->n) {
            return constant(falling);
        }
        std::vector<double> coeffs(impl_->n - order + 1, 0.0);
        coeffs.back() = falling;
        return polynomial(std::move(coeffs));
    }
    case Catalog::Polynomial: {
        std::vector<double> coeffs = impl_->coeffs;
        for (int step = 0; step < order; ++step) {
            if (coeffs.size() <= 1) {
                return constant(0.0);
            }
            std::vector<double> next(coeffs.size() - 1);
            for (std::size_t j = 1; j < coeffs.size(); ++j) {
                next[j - 1] = coeffs[j] * static_cast<double>(j);
            }
            coeffs = std::move(next);
        }
        return polynomial(std::move(coeffs));
    }
    case Catalog::Fourier: {
        // term-wise: (a_j sin, b_j cos) -> (-j b_j sin, j a_j cos) per order
        std::vector<double> a = impl_->coeffs;
        std::vector<double> b = impl_->cos_coeffs;
        const std::size_t terms = std::max(a.size(), b.size());
        a.resize(terms, 0.0);
        b.resize(terms, 0.0);
        for (int step = 0; step < order; ++step) {
            std::vector<double> na(terms), nb(terms);
            for (std::size_t j = 0; j < terms; ++j) {
                const double freq = j + 1.0;
                na[j] = -freq * b[j];
                nb[j] = freq * a[j];
            }
            a = std::move(na);
            b = std::move(nb);
        }
        return fourier(std::move(a), std::move(b));
    }
    }
    throw std::logic_error("FunctionSpec::derivative: malformed impl");
}

std::string FunctionSpec::describe() const {
    if (impl_->fd_base) {
        std::ostringstream os;
        os << "fd_derivative(order=" << impl_->fd_order << ")";
        return os.str();
    }
    switch (impl_->kind) {
    case Kind::Expression:
        return impl_->src;
    case Kind::Samples:
        return "samples[" + std::to_string(impl_->ts.size()) + "]";
    case Kind::Catalog:
        break;
    }
    switch (*impl_->cat) {
    case Catalog::Sine: return "sin";
    case Catalog::Cosine: return "cos";
    case Catalog::Exponential: return "exp";
    case Catalog::Power: return "t^" + std::to_string(impl_->n);
    case Catalog::Constant: return format_double(impl_->c);
    case Catalog::Fourier: return "fourier[" + std::to_string(impl_->coeffs.size()) + "]";
    case Catalog::Polynomial: return "poly[deg " + std::to_string(impl_->coeffs.size() - 1) + "]";
    }
    return "?";
}

FunctionSpec FunctionSpec::sine() {
    auto impl = std::make_shared<Impl>();
    impl->cat = Catalog::Sine;
    return FunctionSpec(impl);
}

FunctionSpec FunctionSpec::cosine() {
    auto impl = std::make_shared<Impl>();
    impl->cat = Catalog::Cosine;
    return FunctionSpec(impl);
}

FunctionSpec FunctionSpec::exponential() {
    auto impl = std::make_shared<Impl>();
    impl->cat = Catalog::Exponential;
    return FunctionSpec(impl);
}

FunctionSpec FunctionSpec::power(int n) {
    if (n < 0) {
        throw std::invalid_argument("power exponent must be >= 0");
    }
    auto impl = std::make_shared<Impl>();
    impl->cat = Catalog::Power;
    impl->n = n;
    return FunctionSpec(impl);
}

FunctionSpec FunctionSpec::constant(double c) {
    auto impl = std::make_shared<Impl>();
    impl->cat = Catalog::Constant;
    impl->c = c;
    return FunctionSpec(impl);
}

FunctionSpec FunctionSpec::fourier(std::vector<double> sin_coeffs, std::vector<double> cos_coeffs) {
    auto impl = std::make_shared<Impl>();
    impl->cat = Catalog::Fourier;
    impl->coeffs = std::move(sin_coeffs);
    impl->cos_coeffs = std::move(cos_coeffs);
    return FunctionSpec(impl);
}

FunctionSpec FunctionSpec::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty()) {
        coeffs.push_back(0.0);
    }
    auto impl = std::make_shared<Impl>();
    impl->cat = Catalog::Polynomial;
    impl->coeffs = std::move(coeffs);
    return FunctionSpec(impl);
}

FunctionSpec FunctionSpec::expression(const std::string& src) {
    return expression(expr::parse(src), src);
}

FunctionSpec FunctionSpec::expression(expr::NodePtr ast, std::string src) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Expression;
    impl->ast = std::move(ast);
    impl->src = std::move(src);
    return FunctionSpec(impl);
}

FunctionSpec FunctionSpec::samples(std::vector<double> ts, std::vector<double> values) {
    if (ts.size() != values.size() || ts.size() < 2) {
        throw std::invalid_argument("samples: need matching ts/values with >= 2 entries");
    }
    for (std::size_t i = 1; i < ts.size(); ++i) {
        if (!(ts[i] > ts[i - 1])) {
            throw std::invalid_argument("samples: ts must be strictly increasing");
        }
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Samples;
    impl->ts = std::move(ts);
    impl->values = std::move(values);
    return FunctionSpec(impl);
}

FunctionSpec FunctionSpec::from_name(const std::string& name_or_expr) {
    std::string s = name_or_expr;
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    if (s == "sin") return sine();
    if (s == "cos") return cosine();
    if (s == "exp") return exponential();
    if (s.rfind("t^", 0) == 0 && s.size() > 2 &&
        s.find_first_not_of("0123456789", 2) == std::string::npos) {
        return power(std::stoi(s.substr(2)));
    }
    try {
        std::size_t consumed = 0;
        const double v = std::stod(s, &consumed);
        if (consumed == s.size()) {
            return constant(v);
        }
    } catch (const std::exception&) {
        // not a bare number; fall through to the expression parser
    }
    return expression(s);
}

} // namespace fmgl
