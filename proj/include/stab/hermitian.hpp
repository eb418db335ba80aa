#pragma once
#include <complex>
#include <cstddef>
#include <vector>

namespace stab {

using Complex = std::complex<double>;

// Dense Hermitian matrix; writes keep the conjugate symmetry.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(std::size_t n) : n_(n), a_(n * n, Complex(0, 0)) {}

    std::size_t size() const { return n_; }
    Complex at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, Complex v);
    void add(std::size_t i, std::size_t j, Complex v) { set(i, j, at(i, j) + v); }

    double trace() const;
    static HermitianMatrix identity(std::size_t n);
    HermitianMatrix& operator+=(const HermitianMatrix& o);
    HermitianMatrix& operator-=(const HermitianMatrix& o);
    HermitianMatrix& operator*=(double s);

    double max_abs() const;

  private:
    std::size_t n_;
    std::vector<Complex> a_;
};

// M - (volume / dim) * Id; the balanced moment matrix has exactly this trace
HermitianMatrix trace_free(const HermitianMatrix& m, double volume);

// ascending eigenvalues by cyclic complex Jacobi rotations
std::vector<double> eigenvalues(const HermitianMatrix& m);

// Schatten q-norm (sum of |eigenvalue|^q)^(1/q), q >= 1
double q_norm(const HermitianMatrix& m, double q);

// sum_ab A_ab * conj(B_ab) reduced to the real trace of A*B^H = A*B
double trace_product(const HermitianMatrix& a, const HermitianMatrix& b);

} // namespace stab
