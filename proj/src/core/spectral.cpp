#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cw {

namespace {
constexpr double kPi = std::numbers::pi;
}

Domain Domain::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("Domain::parse: expected 'interval:L' or 'rect:Lx,Ly'");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (kind == "interval") {
        const double length = std::stod(rest);
        if (length <= 0.0) throw std::invalid_argument("Domain::parse: length must be > 0");
        return interval(length);
    }
    if (kind == "rect") {
        const auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("Domain::parse: rect needs 'Lx,Ly'");
        const double lx = std::stod(rest.substr(0, comma));
        const double ly = std::stod(rest.substr(comma + 1));
        if (lx <= 0.0 || ly <= 0.0)
            throw std::invalid_argument("Domain::parse: sides must be > 0");
        return rectangle(lx, ly);
    }
    throw std::invalid_argument("Domain::parse: unknown kind '" + kind + "'");
}

std::string Domain::to_string() const {
    if (kind == Kind::Interval) return "interval:" + std::to_string(lx);
    return "rect:" + std::to_string(lx) + "," + std::to_string(ly);
}

std::shared_ptr<const SpectralBasis> SpectralBasis::dirichlet(Domain domain, int n) {
    if (n < 1) throw std::invalid_argument("dirichlet_basis: N must be >= 1");
    if (domain.lx <= 0.0 || (domain.kind == Domain::Kind::Rectangle && domain.ly <= 0.0))
        throw std::invalid_argument("dirichlet_basis: non-positive domain dimensions");

    auto basis = std::shared_ptr<SpectralBasis>(new SpectralBasis());
    basis->domain_ = domain;

    if (domain.kind == Domain::Kind::Interval) {
        basis->eigenvalues_.reserve(n);
        basis->modes_.reserve(n);
        for (int j = 1; j <= n; ++j) {
            const double f = j * kPi / domain.lx;
            basis->eigenvalues_.push_back(f * f);
            basis->modes_.emplace_back(j, 0);
        }
    } else {
        // Enumerate tensor modes up to J with J^2 >= 4N so the first N
        // sorted eigenvalues are complete, then sort; ties by (j, k).
        const int grid = std::max(2, static_cast<int>(std::ceil(2.0 * std::sqrt(n))));
        struct Entry {
            double lambda;
            int j, k;
        };
        std::vector<Entry> entries;
        entries.reserve(static_cast<std::size_t>(grid) * grid);
        for (int j = 1; j <= grid; ++j)
            for (int k = 1; k <= grid; ++k) {
                const double fx = j * kPi / domain.lx;
                const double fy = k * kPi / domain.ly;
                entries.push_back({fx * fx + fy * fy, j, k});
            }
        std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            if (a.lambda != b.lambda) return a.lambda < b.lambda;
            if (a.j != b.j) return a.j < b.j;
            return a.k < b.k;
        });
        basis->eigenvalues_.reserve(n);
        basis->modes_.reserve(n);
        for (int i = 0; i < n; ++i) {
            basis->eigenvalues_.push_back(entries[i].lambda);
            basis->modes_.emplace_back(entries[i].j, entries[i].k);
        }
    }
    return basis;
}

double SpectralBasis::eigenvalue(int n) const {
    if (n < 0 || n >= size()) throw std::out_of_range("SpectralBasis: index out of range");
    return eigenvalues_[n];
}

std::pair<int, int> SpectralBasis::mode(int n) const {
    if (n < 0 || n >= size()) throw std::out_of_range("SpectralBasis: index out of range");
    return modes_[n];
}

double SpectralBasis::eval(int n, double x) const {
    if (domain_.kind != Domain::Kind::Interval)
        throw std::invalid_argument("SpectralBasis::eval: 1-d call on a 2-d basis");
    const int j = mode(n).first;
    const double length = domain_.lx;
    return std::sqrt(2.0 / length) * std::sin(j * kPi * x / length);
}

double SpectralBasis::eval(int n, double x, double y) const {
    if (domain_.kind != Domain::Kind::Rectangle)
        throw std::invalid_argument("SpectralBasis::eval: 2-d call on a 1-d basis");
    const auto [j, k] = mode(n);
    return std::sqrt(2.0 / domain_.lx) * std::sin(j * kPi * x / domain_.lx) *
           std::sqrt(2.0 / domain_.ly) * std::sin(k * kPi * y / domain_.ly);
}

double SpectralBasis::weyl_ratio(int n) const {
    if (n < 1 || n > size()) throw std::out_of_range("weyl_ratio: index out of range");
    const double lambda = eigenvalues_[n - 1];
    return static_cast<double>(n) * static_cast<double>(n) *
           std::pow(lambda, -static_cast<double>(dim()));
}

nlohmann::json SpectralBasis::to_json() const {
    return {{"domain", domain_.to_string()}, {"N", size()}, {"eigenvalues", eigenvalues_}};
}

SpectralOperator::SpectralOperator(std::shared_ptr<const SpectralBasis> basis,
                                   std::vector<double> alphas)
    : basis_(std::move(basis)), alphas_(std::move(alphas)) {
    if (!basis_) throw std::invalid_argument("SpectralOperator: null basis");
    if (static_cast<int>(alphas_.size()) > basis_->size())
        throw std::invalid_argument("SpectralOperator: more alphas than basis modes");
    for (double a : alphas_)
        if (!(a >= 0.0)) throw std::invalid_argument("SpectralOperator: alphas must be >= 0");
}

double SpectralOperator::trace() const {
    double sum = 0.0, c = 0.0;
    for (double a : alphas_) {
        const double y = a - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double SpectralOperator::hs_norm() const {
    double sum = 0.0, c = 0.0;
    for (double a : alphas_) {
        const double y = a * a - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return std::sqrt(sum);
}

SpectralOperator SpectralOperator::frac_power(double s) const {
    std::vector<double> out(alphas_.size());
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
        if (alphas_[i] == 0.0 && s < 0.0)
            throw std::domain_error("frac_power: negative power of zero eigenvalue");
        out[i] = std::pow(alphas_[i], s);
    }
    return SpectralOperator(basis_, std::move(out));
}

SpectralOperator SpectralOperator::from_eigenvalue_power(
    std::shared_ptr<const SpectralBasis> basis, double exponent) {
    if (!basis) throw std::invalid_argument("from_eigenvalue_power: null basis");
    std::vector<double> alphas(basis->size());
    for (int i = 0; i < basis->size(); ++i)
        alphas[i] = std::pow(basis->eigenvalue(i), exponent);
    return SpectralOperator(std::move(basis), std::move(alphas));
}

nlohmann::json SpectralOperator::to_json() const {
    auto j = basis_->to_json();
    j["alpha"] = alphas_;
    return j;
}

} // namespace cw
