#include "fde/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fde {

WeightSequence::WeightSequence(Kind k, double p, std::vector<double> t)
    : kind_(k), p_(p), table_(std::move(t)) {
    if (kind_ == Kind::power && !(p_ >= 0.0))
        throw std::invalid_argument("weight exponent p must be >= 0");
    if (kind_ == Kind::table) {
        if (table_.empty()) throw std::invalid_argument("weight table must be nonempty");
        double prev = 0.0;
        for (double v : table_) {
            if (!(v > 0.0)) throw std::invalid_argument("weight table entries must be positive");
            if (v < prev) throw std::invalid_argument("weight table must be nondecreasing");
            prev = v;
        }
        if (table_.size() >= 2) {
            double r = table_.back() / table_[table_.size() - 2];
            ratio_ = std::max(1.0, r);
        }
    }
}

WeightSequence WeightSequence::linear() { return {Kind::linear, 1.0, {}}; }
WeightSequence WeightSequence::power(double p) { return {Kind::power, p, {}}; }
WeightSequence WeightSequence::constant() { return {Kind::constant, 0.0, {}}; }
WeightSequence WeightSequence::table(std::vector<double> values) {
    return {Kind::table, 0.0, std::move(values)};
}

double WeightSequence::operator()(std::size_t n) const {
    if (n == 0) throw std::domain_error("weight sequence is indexed from n = 1");
    switch (kind_) {
        case Kind::linear:   return static_cast<double>(n);
        case Kind::power:    return std::pow(static_cast<double>(n), p_);
        case Kind::constant: return 1.0;
        case Kind::table:
            if (n <= table_.size()) return table_[n - 1];
            return table_.back() * std::pow(ratio_, static_cast<double>(n - table_.size()));
    }
    throw std::logic_error("unreachable");
}

std::string WeightSequence::kind_name() const {
    switch (kind_) {
        case Kind::linear:   return "linear";
        case Kind::power:    return "power";
        case Kind::constant: return "constant";
        case Kind::table:    return "table";
    }
    return "?";
}

HahnVector::HahnVector(std::vector<double> v) : values(std::move(v)) {
    for (double x : values)
        if (!std::isfinite(x)) throw std::invalid_argument("HahnVector entries must be finite");
}

HahnVector HahnVector::basis(std::size_t j, std::size_t length) {
    if (j == 0 || j > length) throw std::invalid_argument("basis index out of range");
    std::vector<double> v(length, 0.0);
    v[j - 1] = 1.0;
    return HahnVector(std::move(v));
}

HahnVector operator+(const HahnVector& a, const HahnVector& b) {
    std::vector<double> v(std::max(a.values.size(), b.values.size()), 0.0);
    for (std::size_t i = 0; i < a.values.size(); ++i) v[i] += a.values[i];
    for (std::size_t i = 0; i < b.values.size(); ++i) v[i] += b.values[i];
    return HahnVector(std::move(v));
}

HahnVector operator-(const HahnVector& a, const HahnVector& b) {
    std::vector<double> v(std::max(a.values.size(), b.values.size()), 0.0);
    for (std::size_t i = 0; i < a.values.size(); ++i) v[i] += a.values[i];
    for (std::size_t i = 0; i < b.values.size(); ++i) v[i] -= b.values[i];
    return HahnVector(std::move(v));
}

HahnVector operator*(double alpha, const HahnVector& m) {
    std::vector<double> v(m.values);
    for (double& x : v) x *= alpha;
    return HahnVector(std::move(v));
}

std::vector<double> forward_difference(const HahnVector& m) {
    const auto& v = m.values;
    std::vector<double> d(v.size());
    for (std::size_t n = 0; n + 1 < v.size(); ++n) d[n] = v[n] - v[n + 1];
    if (!v.empty()) d.back() = v.back();
    return d;
}

double hahn_norm(const HahnVector& m, const WeightSequence& d) {
    const auto& v = m.values;
    double s = 0.0;
    for (std::size_t n = 1; n < v.size(); ++n) s += d(n) * std::abs(v[n - 1] - v[n]);
    if (!v.empty()) s += d(v.size()) * std::abs(v.back());
    return s;
}

HahnVector section(const HahnVector& m, std::size_t r) {
    std::vector<double> v(m.values.begin(),
                          m.values.begin() + static_cast<std::ptrdiff_t>(std::min(r, m.values.size())));
    return HahnVector(std::move(v));
}

double ak_defect(const HahnVector& m, std::size_t r, const WeightSequence& d) {
    return hahn_norm(m - section(m, r), d);
}

} // namespace fde
