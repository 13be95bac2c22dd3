#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lipwb {

using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<std::vector<Q>>;

// Accepts only canonical forms: "0", "-3", "7/2". Rejects "2/4", "3/1",
// "-0", "+1", leading zeros and whitespace.
Q parse_rational(const std::string& s);
std::string to_string(const Q& q);

inline Q qabs(const Q& q) { return q < 0 ? Q(-q) : q; }
inline int qsign(const Q& q) { return sgn(q); }
Q qpow(const Q& base, unsigned long e);
Q pow2_neg(unsigned long e);  // 2^-e

Q linf(const QVec& a);
Q l1(const QVec& a);

// Deterministic rational in [lo, hi] with denominator in 1..max_den, drawn
// by plain modulo mapping so the stream is identical across stdlib builds.
Q random_rational(std::mt19937_64& rng, long lo, long hi, unsigned max_den);

}  // namespace lipwb
