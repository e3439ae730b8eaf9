#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/charpoly.hpp"
#include "ncg/numeric.hpp"
#include "ncg/poly.hpp"
#include "ncg/spectrum.hpp"

namespace ncg {

/// n_{i+2} = 322 n_{i+1} - n_i - 192 from one of the three seed pairs;
/// every term t satisfies (t-1)(5t-1) = perfect square.
inline std::vector<Int> branch_sequence(int branch, int count) {
    if (branch < 1 || branch > 3) throw std::invalid_argument("branch must be 1, 2 or 3");
    if (count < 0) throw std::invalid_argument("count must be >= 0");
    static const long seeds[3][2] = {{1, 65}, {2, 442}, {10, 3026}};
    std::vector<Int> out;
    if (count >= 1) out.emplace_back(seeds[branch - 1][0]);
    if (count >= 2) out.emplace_back(seeds[branch - 1][1]);
    while (static_cast<int>(out.size()) < count)
        out.push_back(322 * out[out.size() - 1] - out[out.size() - 2] - 192);
    return out;
}

/// Merged recurrence n_{i+6} = 322 n_{i+3} - n_i - 192; interleaves the
/// three branches in increasing order.
inline std::vector<Int> merged_sequence(int count) {
    if (count < 0) throw std::invalid_argument("count must be >= 0");
    static const long seeds[6] = {1, 2, 10, 65, 442, 3026};
    std::vector<Int> out;
    for (int i = 0; i < count && i < 6; ++i) out.emplace_back(seeds[i]);
    while (static_cast<int>(out.size()) < count)
        out.push_back(322 * out[out.size() - 3] - out[out.size() - 6] - 192);
    return out;
}

struct SquareWitness {
    Int sqrt_n_minus_1;
    Int sqrt_5n_minus_1;
};

/// Exact integer square roots of n-1 and 5n-1 when both are squares.
inline std::optional<SquareWitness> square_witnesses(const Int& n) {
    if (n < 1) throw std::invalid_argument("square_witnesses needs n >= 1");
    auto a = exact_sqrt(n - 1);
    if (!a) return std::nullopt;
    auto b = exact_sqrt(5 * n - 1);
    if (!b) return std::nullopt;
    return SquareWitness{*a, *b};
}

struct HalvedWitness {
    Int m;     // n/2
    Int root;  // sqrt((2m-1)(10m-1))
};

/// Even n with (n-1)(5n-1) square yields (2m-1)(10m-1) square at m = n/2.
inline HalvedWitness halved_witness(const Int& n) {
    if (n % 2 != 0) throw std::invalid_argument("halved_witness needs even n");
    if (!square_witnesses(n)) throw std::invalid_argument("halved_witness: (n-1)(5n-1) is not a perfect square");
    Int m = n / 2;
    auto root = exact_sqrt((2 * m - 1) * (10 * m - 1));
    if (!root) throw std::logic_error("even-halving property failed");  // would refute the observation
    return {std::move(m), std::move(*root)};
}

struct FibLucasRow {
    Int n;
    Int witness_fib;    // sqrt(n-1)
    Int witness_lucas;  // sqrt(5n-1)
    Int fib;            // F_{2(i-1)}
    Int lucas;          // L_{2(i-1)}
    bool ok;
};

/// Checks sqrt(n_i - 1) = F_{2(i-1)} and sqrt(5 n_i - 1) = L_{2(i-1)} for the
/// merged sequence, using exact big-integer Fibonacci/Lucas values.
inline std::vector<FibLucasRow> fib_lucas_check(int count) {
    std::vector<FibLucasRow> rows;
    auto seq = merged_sequence(count);
    for (int i = 0; i < count; ++i) {
        auto w = square_witnesses(seq[static_cast<std::size_t>(i)]);
        if (!w) throw std::logic_error("sequence term lost the square property");
        unsigned long k = static_cast<unsigned long>(2 * i);
        Int f = fibonacci(k), l = lucas(k);
        bool ok = (w->sqrt_n_minus_1 == f) && (w->sqrt_5n_minus_1 == l);
        rows.push_back({seq[static_cast<std::size_t>(i)], w->sqrt_n_minus_1, w->sqrt_5n_minus_1, f, l, ok});
    }
    return rows;
}

/// CSV table of the first `rows` terms: n, sqrt(n-1), sqrt(5n-1), n/2 when n
/// is even (empty cell otherwise).
inline std::string square_table_csv(int rows) {
    std::ostringstream os;
    os << "n,sqrt(n-1),sqrt(5n-1),n/2\n";
    for (const auto& n : merged_sequence(rows)) {
        auto w = square_witnesses(n);
        if (!w) throw std::logic_error("sequence term lost the square property");
        os << n.get_str() << "," << w->sqrt_n_minus_1.get_str() << "," << w->sqrt_5n_minus_1.get_str() << ",";
        if (n % 2 == 0) os << Int(n / 2).get_str();
        os << "\n";
    }
    return os.str();
}

/// Bounded exhaustive scan: all n <= bound with (n-1)(5n-1) a perfect square.
/// Confirms (below the bound) that the recurrences miss no solutions.
inline std::vector<long> exhaustive_square_scan(long bound) {
    std::vector<long> out;
    for (long n = 1; n <= bound; ++n) {
        unsigned long long v = static_cast<unsigned long long>(n - 1) * static_cast<unsigned long long>(5 * n - 1);
        unsigned long long r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(v)));
        while (r > 0 && r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        if (r * r == v) out.push_back(n);
    }
    return out;
}

/// The nine families of complete multipartite shapes that the sequence terms
/// make integral. Cases mirror the published list (a-i).
enum class IntegralCase { A, B, C, D, E, F, G, H, I };

inline const char* integral_case_name(IntegralCase c) {
    switch (c) {
        case IntegralCase::A: return "a (V_8n at n = term/2)";
        case IntegralCase::B: return "b (SD_8n, odd terms)";
        case IntegralCase::C: return "c (SD_8m at m = term/2)";
        case IntegralCase::D: return "d (dihedral quotient, |Z| parameter)";
        case IntegralCase::E: return "e (M_2rs, odd terms, s parameter)";
        case IntegralCase::F: return "f (M_2rs even form, s parameter)";
        case IntegralCase::G: return "g (D_2n, odd terms)";
        case IntegralCase::H: return "h (D_2m even form at m = 2 term)";
        case IntegralCase::I: return "i (Q_4n)";
    }
    return "?";
}

/// Shape for one sequence term; nullopt when the case's parity constraint
/// fails or the instance degenerates (a part of size 0 or a single part).
inline std::optional<MultipartiteShape> integral_graph_instance(IntegralCase c, const Int& term, const Int& aux = 1) {
    const bool even = (term % 2 == 0);
    auto two_class = [](const Int& count, const Int& size, const Int& tail) -> std::optional<MultipartiteShape> {
        if (size < 1 || tail < 1 || count < 1) return std::nullopt;
        return MultipartiteShape::from_classes({{size, count}, {tail, 1}});
    };
    switch (c) {
        case IntegralCase::A: {
            if (!even) return std::nullopt;
            Int n = term / 2;
            return two_class(2 * n, 2, 4 * n - 2);
        }
        case IntegralCase::B:
            if (even) return std::nullopt;
            return two_class(term, 4, 4 * term - 4);
        case IntegralCase::C: {
            if (!even) return std::nullopt;
            Int m = term / 2;
            return two_class(2 * m, 2, 4 * m - 2);
        }
        case IntegralCase::D: return two_class(term, aux, (term - 1) * aux);
        case IntegralCase::E:
            if (even) return std::nullopt;
            return two_class(term, aux, aux * (term - 1));
        case IntegralCase::F: return two_class(term, 2 * aux, 2 * aux * (term - 1));
        case IntegralCase::G:
            if (even) return std::nullopt;
            return two_class(term, 1, term - 1);
        case IntegralCase::H: return two_class(term, 2, 2 * (term - 1));
        case IntegralCase::I: return two_class(term, 2, 2 * (term - 1));
    }
    return std::nullopt;
}

/// All shapes a theorem case emits at sequence index i (1-based), sweeping the
/// free parameter for the parameterized cases.
inline std::vector<MultipartiteShape> integral_graph_instances(int index, IntegralCase c,
                                                               const std::vector<long>& aux_values = {1, 2, 3}) {
    auto seq = merged_sequence(index);
    if (index < 1) throw std::invalid_argument("sequence index is 1-based");
    const Int& term = seq[static_cast<std::size_t>(index - 1)];
    std::vector<MultipartiteShape> out;
    const bool parameterized = (c == IntegralCase::D || c == IntegralCase::E || c == IntegralCase::F);
    if (parameterized) {
        for (long a : aux_values)
            if (auto s = integral_graph_instance(c, term, Int(a))) out.push_back(std::move(*s));
    } else if (auto s = integral_graph_instance(c, term)) {
        out.push_back(std::move(*s));
    }
    return out;
}

/// Exact integrality certificate via the class-reduced matrix: the 0 and -s
/// eigenvalue families are always integers, so the verdict hinges on the
/// reduced characteristic polynomial splitting into integer linear factors.
struct IntegralityCertificate {
    MultipartiteShape shape;
    IPoly reduced_charpoly;
    std::vector<std::pair<Int, int>> integer_roots;
    bool integral = false;
    std::string detail;
};

inline IntegralityCertificate certify_integral(const MultipartiteShape& shape) {
    IntegralityCertificate cert;
    cert.shape = shape;
    cert.reduced_charpoly = char_poly_exact(multipartite_class_matrix(shape));
    IPoly residual = cert.reduced_charpoly;
    cert.integer_roots = extract_integer_roots(residual);
    // reconstruct to certify the factorization is the whole polynomial
    IPoly rebuilt = IPoly::constant(1);
    for (const auto& [r, mult] : cert.integer_roots)
        for (int k = 0; k < mult; ++k) rebuilt = rebuilt * IPoly::x_minus(r);
    cert.integral = (residual.degree() == 0) && (rebuilt == cert.reduced_charpoly);
    std::ostringstream os;
    if (cert.integral) {
        os << "reduced charpoly " << poly_to_string(cert.reduced_charpoly) << " splits: ";
        bool first = true;
        for (const auto& [r, mult] : cert.integer_roots) {
            if (!first) os << ", ";
            first = false;
            os << r.get_str();
            if (mult > 1) os << "^" << mult;
        }
    } else {
        os << "reduced charpoly " << poly_to_string(cert.reduced_charpoly) << " has non-integer factor "
           << poly_to_string(residual);
    }
    cert.detail = os.str();
    return cert;
}

}  // namespace ncg
