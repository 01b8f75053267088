#pragma once

// Closed-form colour bounds, all in exact integer arithmetic (no floating
// point anywhere). Valid for 2 <= k <= 2^20; callers outside that range get
// std::invalid_argument.

#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fragcol {

namespace detail {

constexpr int kMaxBoundArg = 1 << 20;

inline std::uint64_t checked_k(long long k, long long lo = 2) {
    // +1 headroom: the bound table evaluates td_cycle/td_path at k+1.
    if (k < lo || k > kMaxBoundArg + 1)
        throw std::invalid_argument("bound argument out of range: " + std::to_string(k));
    return static_cast<std::uint64_t>(k);
}

// floor(log2 x) for x >= 1.
inline int floor_log2(std::uint64_t x) { return std::bit_width(x) - 1; }

// ceil(log2 x) for x >= 1.
inline int ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : std::bit_width(x - 1); }

}  // namespace detail

// floor(3 log2 k): the largest t with 2^t <= k^3.
inline int theorem1_bound(long long k) {
    std::uint64_t kk = detail::checked_k(k);
    return detail::floor_log2(kk * kk * kk);
}

// Upper bound via the recurrence
//   h(2) = 2,   h(k) = 5 for 3 <= k <= 9,   h(k) = h(ceil((k-7)/2)) + 3 for k >= 10.
inline int h_bound(long long k) {
    std::uint64_t kk = detail::checked_k(k);
    int acc = 0;
    while (kk >= 10) {
        kk = (kk - 6) / 2;  // ceil((k-7)/2) for k >= 10
        acc += 3;
    }
    return acc + (kk == 2 ? 2 : 5);
}

// floor(log2 k) + 1.
inline int lower_bound_colours(long long k) {
    return detail::floor_log2(detail::checked_k(k)) + 1;
}

// Tree-depth of the cycle on m vertices: 1 + ceil(log2 m), m >= 3.
inline int td_cycle(long long m) {
    return 1 + detail::ceil_log2(detail::checked_k(m, 3));
}

// Tree-depth of the path on m vertices: ceil(log2 (m+1)), m >= 1.
inline int td_path(long long m) {
    return detail::ceil_log2(detail::checked_k(m, 1) + 1);
}

// ceil(log2 (k+1)).
inline int conjectured_f(long long k) {
    return detail::ceil_log2(detail::checked_k(k) + 1);
}

// max(2, ceil((k-7)/2)): circumference bound after deleting a longest cycle
// from a 3-connected graph of circumference k.
inline int deletion_bound(long long k) {
    std::uint64_t kk = detail::checked_k(k);
    if (kk <= 8) return 2;
    int raw = static_cast<int>((kk - 6) / 2);  // ceil((k-7)/2), k >= 9
    return raw < 2 ? 2 : raw;
}

struct BoundTableRow {
    int k;
    int theorem1;
    int h;
    int lower;
    int td_cycle;  // of the (k+1)-cycle
    int td_path;   // of the (k+1)-vertex path
    int conjectured_f;
};

inline BoundTableRow bound_table_row(long long k) {
    return BoundTableRow{static_cast<int>(k),
                         theorem1_bound(k),
                         h_bound(k),
                         lower_bound_colours(k),
                         td_cycle(k + 1),
                         td_path(k + 1),
                         conjectured_f(k)};
}

// CSV with header "k,theorem1,h,lower,td_cycle,td_path,conjectured_f" and one
// row per k in [2, kmax].
inline void write_bound_table(std::ostream& out, long long kmax) {
    if (kmax < 2 || kmax > detail::kMaxBoundArg)
        throw std::invalid_argument("kmax out of range: " + std::to_string(kmax));
    out << "k,theorem1,h,lower,td_cycle,td_path,conjectured_f\n";
    for (long long k = 2; k <= kmax; ++k) {
        BoundTableRow r = bound_table_row(k);
        out << r.k << ',' << r.theorem1 << ',' << r.h << ',' << r.lower << ',' << r.td_cycle
            << ',' << r.td_path << ',' << r.conjectured_f << '\n';
    }
}

}  // namespace fragcol
