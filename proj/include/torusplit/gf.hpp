#pragma once

#include <stdexcept>
#include <vector>

namespace torusplit {

/// Small finite field GF(p^k) in a polynomial basis over the least
/// lexicographic monic irreducible.  Elements are integers in [0, q)
/// encoding base-p digit vectors (coefficient of x^i = digit i).
class GF {
public:
    GF(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return mod_; }  // monic, size k+1

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, long long e) const;
    int from_int(long long n) const;  // image of an integer (prime subfield)

    bool is_square(int a) const;      // a != 0, via a^((q-1)/2)
    int generator() const;            // a fixed generator of the unit group

private:
    int p_, k_, q_;
    std::vector<int> mod_;

    std::vector<int> digits(int a) const;
    int undigits(const std::vector<int>& d) const;
};

}  // namespace torusplit
