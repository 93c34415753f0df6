#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fde {

/// Weight sequence d = (d_n), n >= 1: positive and monotonically
/// nondecreasing. Closed-form kinds plus a custom table that is extended
/// past its last entry by the final growth ratio (clamped to >= 1 so the
/// extension stays monotone).
class WeightSequence {
public:
    enum class Kind { linear, power, constant, table };

    static WeightSequence linear();
    static WeightSequence power(double p);
    static WeightSequence constant();
    static WeightSequence table(std::vector<double> values);

    /// d_n for n >= 1. Deterministic; throws std::domain_error for n == 0.
    double operator()(std::size_t n) const;

    Kind kind() const { return kind_; }
    double exponent() const { return p_; }
    const std::vector<double>& table_values() const { return table_; }
    std::string kind_name() const;

private:
    WeightSequence(Kind k, double p, std::vector<double> t);

    Kind kind_;
    double p_ = 0.0;
    std::vector<double> table_;
    double ratio_ = 1.0; // table extension ratio
};

/// Finitely supported sequence (m_1, ..., m_N, 0, 0, ...). Exact container
/// for h_d arithmetic: norms and differences are finite sums.
struct HahnVector {
    std::vector<double> values;

    HahnVector() = default;
    explicit HahnVector(std::vector<double> v);

    std::size_t support_length() const { return values.size(); }

    static HahnVector basis(std::size_t j, std::size_t length);
};

HahnVector operator+(const HahnVector& a, const HahnVector& b);
HahnVector operator-(const HahnVector& a, const HahnVector& b);
HahnVector operator*(double alpha, const HahnVector& m);

/// Delta m_n = m_n - m_{n+1}; the last entry is m_N since m_{N+1} = 0.
std::vector<double> forward_difference(const HahnVector& m);

/// ||m||_{h_d} = sum_n d_n |Delta m_n|, exact for finite support.
double hahn_norm(const HahnVector& m, const WeightSequence& d);

/// r-section: first min(r, N) entries kept, the rest dropped.
HahnVector section(const HahnVector& m, std::size_t r);

/// ||m - m^[r]||_{h_d}; zero for every r >= N.
double ak_defect(const HahnVector& m, std::size_t r, const WeightSequence& d);

} // namespace fde
