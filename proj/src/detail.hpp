#pragma once

// Internal helpers shared by the library sources.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cigf/distribution.hpp"

namespace cigf::detail {

inline std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

class DiscreteModel final : public DistributionModel {
public:
    DiscreteModel(std::vector<Atom> atoms, FamilyTag tag);

    double cdf(double x) const override;
    double sf(double x) const override;
    double quantile(double u) const override;
    bool has_mgf() const override { return true; }
    double mgf(double s) const override;
    std::optional<double> mean() const override;
    SupportInterval support() const override;
    FamilyTag tag() const override { return tag_; }
    const std::vector<Atom>* atoms() const override { return &atoms_; }

private:
    std::vector<Atom> atoms_;
    std::vector<double> cum_;
    std::vector<double> upper_;
    FamilyTag tag_;
};

/// Merge duplicate locations, drop zero masses, check normalization.
std::vector<Atom> normalize_atoms(std::vector<Atom> atoms);

/// Quantile by bisection on the cdf (u <= 1/2) or the survival function.
double bisect_quantile(const std::function<double(double)>& cdf, const std::function<double(double)>& sf, double u,
                       double v, SupportInterval s);

}  // namespace cigf::detail
