#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "matword/word.hpp"

namespace matword {

inline constexpr int kMaxDim = 16;  // oracle-scale cap

// Small dense square matrix, row major. Real and complex variants.
template <typename Scalar>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n) : n_(check_dim(n)), a_(size_t(n) * n, Scalar{}) {}
    SquareMatrix(int n, std::vector<Scalar> entries)
        : n_(check_dim(n)), a_(std::move(entries)) {
        if (a_.size() != size_t(n_) * n_)
            throw std::invalid_argument("matrix entry count does not match dimension");
    }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar{1};
        return m;
    }

    int dim() const { return n_; }
    Scalar& at(int i, int j) { return a_[size_t(i) * n_ + j]; }
    const Scalar& at(int i, int j) const { return a_[size_t(i) * n_ + j]; }
    const std::vector<Scalar>& entries() const { return a_; }

    SquareMatrix transpose() const {
        SquareMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("dimension mismatch in product");
        SquareMatrix p(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int l = 0; l < x.n_; ++l) {
                Scalar xv = x.at(i, l);
                if (xv == Scalar{}) continue;
                for (int j = 0; j < x.n_; ++j) p.at(i, j) += xv * y.at(l, j);
            }
        return p;
    }

    bool operator==(const SquareMatrix&) const = default;

private:
    static int check_dim(int n) {
        if (n < 1 || n > kMaxDim)
            throw std::invalid_argument("matrix dimension out of range [1,16]");
        return n;
    }

    int n_ = 0;
    std::vector<Scalar> a_;
};

using Matrix = SquareMatrix<double>;
using CMatrix = SquareMatrix<std::complex<double>>;

double frobenius_norm(const Matrix& m);
double frobenius_norm(const CMatrix& m);
double trace(const Matrix& m);
Matrix matrix_power(const Matrix& m, int p);
CMatrix to_complex(const Matrix& m);
CMatrix adjoint(const CMatrix& m);
bool is_symmetric_matrix(const Matrix& m, double tol);

// [[cos t, -sin t], [sin t, cos t]]
Matrix rotation_matrix(double theta);

struct Spectrum {
    std::vector<std::complex<double>> eigenvalues;
    double residual = 0.0;  // max backward-error estimate over eigenpairs
};

struct SpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All complex eigenvalues of m. The residual is
// max_i ||m v_i - lambda_i v_i|| / (1 + ||m||_F) over unit eigenvectors;
// a residual above tol (or solver non-convergence) throws SpectrumError.
Spectrum spectrum(const Matrix& m, double tol = 1e-8);
Spectrum spectrum(const CMatrix& m, double tol = 1e-8);

double max_imag(const Spectrum& s);
double min_real(const Spectrum& s);
bool is_real_spectrum(const Spectrum& s, double imag_tol);
bool is_psd_spectrum(const Spectrum& s, double tol);

// Default tolerance scaling: 1e-8 * (1 + ||m||_F).
double default_spectral_tol(const Matrix& m, double base = 1e-8);

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Left-to-right product substituting each factor's matrix; Transpose
// markers transpose, Sym markers require a symmetric matrix (entrywise
// 1e-12 absolute). Missing variables and dimension mismatches throw.
Matrix evaluate(const Word& w, const std::map<int, Matrix>& assignment);

// Complex variant: Transpose markers mean conjugate transpose; Sym
// markers are rejected.
CMatrix evaluate_complex(const Word& w, const std::map<int, CMatrix>& assignment);

// Text format: first line n, then n rows of scalars. Complex entries
// print as a+bi.
std::string write_matrix(const Matrix& m);
std::string write_matrix(const CMatrix& m);
Matrix read_matrix(std::istream& in);

// Assignment file: a sequence of "var NAME" lines each followed by a
// matrix block in the format above.
std::map<std::string, Matrix> read_assignment_file(std::istream& in);
std::string write_assignment_file(const std::map<std::string, Matrix>& by_name);

}  // namespace matword
