#pragma once

// Sobolev, BMO and Besov seminorms of locally constant functions.
//
// For f in LC_m every quantity below is a finite sum: disks smaller than the
// level-m cosets see a constant function, and f * Delta_n = f for n >= m.

#include <cstdint>
#include <vector>

#include "pqc/function_space.hpp"

namespace pqc {

/// (sum_a |a|_p |fhat_a|^2)^{1/2}; constants are in the kernel.
double sobolev_half_norm(const FourierSpectrum& spectrum);
double sobolev_half_norm(const LocallyConstantFn& f);

/// Mean of f over the disk coset + p^k Z_p, 0 <= coset < p^k.
Complex disk_mean(const LocallyConstantFn& f, std::int64_t coset, int k);

/// M_0, ..., M_level where M_n is the largest mean absolute deviation from the
/// disk mean over all disks of measure <= p^{-n}.
std::vector<double> bmo_oscillation_sequence(const LocallyConstantFn& f);

/// sup_n M_n = M_0.
double bmo_seminorm(const LocallyConstantFn& f);

/// (sum_n (p^{ns} ||f - f * Delta_n||_q)^r)^{1/r}; q and r may be infinite.
double besov_seminorm_discrete(const LocallyConstantFn& f, double q, double r, double s);

/// (int ||f(. - y) - f||_q^r |y|_p^{-sr} dy / |y|_p)^{1/r} over Z_p, evaluated
/// exactly on the integer shifts 1 .. p^m - 1. Requires finite q and r.
double besov_seminorm_integral(const LocallyConstantFn& f, double q, double r, double s);

/// (sum_n (p^{n/q} ||f - f * Delta_n||_BMO)^q)^{1/q}.
double besov_bmo_refined_sequence(const LocallyConstantFn& f, double q);

struct BesovParameters {
    double q;
    double r;
    double s;
};

struct BesovValue {
    BesovParameters params;
    double discrete;
    double integral;  // NaN where the integral form is undefined
};

struct SeminormReport {
    double sobolev_half = 0.0;
    double bmo = 0.0;
    std::vector<double> vmo_sequence;
    std::vector<BesovValue> besov;
};

/// The Besov list defaults to (q, q, 1/q) for q in {1, 2, 4}.
SeminormReport seminorm_report(const LocallyConstantFn& f, std::vector<BesovParameters> besov = {});

}  // namespace pqc
