// Prints the particular solution F0 degree by degree, then checks it against
// the first KV equation.
#include <kvlie/kvlie.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv)
{
    const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 6;
    const auto pair = kvlie::f0_pair(n);
    for (std::size_t d = 1; d <= n; ++d) {
        std::cout << "F0[" << d << "] = " << kvlie::format_text(pair.F[d]) << "\n";
    }
    const auto defect = kvlie::verify_kv1(pair);
    std::cout << (defect.is_zero() ? "KV-1 holds" : "KV-1 FAILS") << " through degree " << n << "\n";
    return defect.is_zero() ? 0 : 1;
}
