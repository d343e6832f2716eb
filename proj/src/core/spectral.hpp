#pragma once

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace cw {

struct Domain {
    enum class Kind { Interval, Rectangle };
    Kind kind = Kind::Interval;
    double lx = 1.0;  // interval length, or rectangle x-side
    double ly = 1.0;  // rectangle y-side (ignored for intervals)

    int dim() const { return kind == Kind::Interval ? 1 : 2; }
    static Domain interval(double length) { return {Kind::Interval, length, 0.0}; }
    static Domain rectangle(double lx, double ly) { return {Kind::Rectangle, lx, ly}; }

    /// Parses "interval:L" or "rect:Lx,Ly".
    static Domain parse(const std::string& text);
    std::string to_string() const;
};

/// Dirichlet Laplacian eigenpairs on an interval or rectangle, sorted by
/// eigenvalue. Rectangle ties are broken lexicographically by (j, k) so
/// the enumeration is deterministic.
class SpectralBasis {
public:
    static std::shared_ptr<const SpectralBasis> dirichlet(Domain domain, int n);

    const Domain& domain() const { return domain_; }
    int size() const { return static_cast<int>(eigenvalues_.size()); }
    int dim() const { return domain_.dim(); }

    double eigenvalue(int n) const;                     // 0-based index
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }

    double eval(int n, double x) const;                 // interval only
    double eval(int n, double x, double y) const;       // rectangle only

    /// Mode numbers behind sorted index n: (j, 0) for intervals, (j, k)
    /// for rectangles (1-based).
    std::pair<int, int> mode(int n) const;

    /// n^2 lambda_n^(-d) with 1-based n; constant 1/pi^2 on the unit
    /// interval, tending to 1/(16 pi^2) on the unit square.
    double weyl_ratio(int n) const;

    nlohmann::json to_json() const;

private:
    SpectralBasis() = default;
    Domain domain_;
    std::vector<double> eigenvalues_;
    std::vector<std::pair<int, int>> modes_;
};

/// Diagonal non-negative operator over a basis: alpha_n on eigenfunction n.
class SpectralOperator {
public:
    SpectralOperator(std::shared_ptr<const SpectralBasis> basis, std::vector<double> alphas);

    const SpectralBasis& basis() const { return *basis_; }
    std::shared_ptr<const SpectralBasis> basis_ptr() const { return basis_; }
    const std::vector<double>& alphas() const { return alphas_; }
    int size() const { return static_cast<int>(alphas_.size()); }

    double trace() const;
    double hs_norm() const;
    SpectralOperator frac_power(double s) const;

    /// alpha_n = lambda_n^exponent over the basis.
    static SpectralOperator from_eigenvalue_power(std::shared_ptr<const SpectralBasis> basis,
                                                  double exponent);

    nlohmann::json to_json() const;

private:
    std::shared_ptr<const SpectralBasis> basis_;
    std::vector<double> alphas_;
};

} // namespace cw
