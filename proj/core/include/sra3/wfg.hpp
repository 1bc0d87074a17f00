#ifndef SRA3_WFG_HPP
#define SRA3_WFG_HPP

#include <cstddef>
#include <span>
#include <vector>

// Building blocks of the WFG toolkit (Huband, Hingston, Barone, While 2006):
// scalar transformations, reductions, and front shape functions. Every
// transformation maps [0,1] into [0,1].
namespace sra3::wfg
{

/// Clamps values within 1e-10 of the unit interval back onto it.
double correct_to_01(double a);

// Bias transformations.
double b_poly(double y, double alpha);
double b_flat(double y, double A, double B, double C);
double b_param(double y, double u, double A, double B, double C);

// Shift transformations.
double s_linear(double y, double A);
double s_decept(double y, double A, double B, double C);
double s_multi(double y, double A, double B, double C);

// Reductions.
double r_sum(std::span<const double> y, std::span<const double> w);
double r_nonsep(std::span<const double> y, std::size_t A);

// Shape functions. `x` holds the M-1 position values; `m` is 1-based.
double linear(std::span<const double> x, std::size_t m);
double convex(std::span<const double> x, std::size_t m);
double concave(std::span<const double> x, std::size_t m);
double mixed(std::span<const double> x, double A, double alpha);
double disc(std::span<const double> x, double A, double alpha, double beta);

/// Maps the reduced vector t (length M) to shape parameters x (length M):
/// x_i = max(t_M, A_i)(t_i - 0.5) + 0.5 for i < M and x_M = t_M.
std::vector<double> calculate_x(std::span<const double> t, std::span<const double> degeneracy);

/// Inverse of b_param for the WFG7-9 constants: the y whose biased value is
/// `target` given the reduction value u.
double b_param_inverse(double target, double u);

} // namespace sra3::wfg

#endif // SRA3_WFG_HPP
