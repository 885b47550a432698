// Prints the maj range of every involution class in S_n, the traversal that
// certifies it, and the fake-degree polynomial of the start shape.
//
//   class_walkthrough [n]

#include <cstdlib>
#include <iostream>

#include "invmaj/majrange.hpp"
#include "invmaj/qpoly.hpp"
#include "invmaj/serialize.hpp"

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 9;
    if (n < 1 || n > 14) {
        std::cerr << "n must be between 1 and 14\n";
        return 2;
    }
    for (int r = n % 2; r <= n; r += 2) {
        auto cb = invmaj::class_bounds(n, r);
        std::cout << "r=" << r << ": maj in [" << cb.bounds.m << ", " << cb.bounds.big_m << "]";
        auto missing = invmaj::missing_values(n, r);
        if (!missing.empty()) std::cout << " except " << invmaj::text::set(missing);
        std::cout << "\n  start shape " << invmaj::to_string(cb.min_shape) << " has fake degrees "
                  << invmaj::to_string(invmaj::stanley_maj_poly(cb.min_shape)) << '\n';
        std::cout << invmaj::text::trace_table(invmaj::algorithm_trace(n, r)) << '\n';
    }
}
