#include "matword/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace matword {

double frobenius_norm(const Matrix& m) {
    double s = 0;
    for (double v : m.entries()) s += v * v;
    return std::sqrt(s);
}

double frobenius_norm(const CMatrix& m) {
    double s = 0;
    for (const auto& v : m.entries()) s += std::norm(v);
    return std::sqrt(s);
}

double trace(const Matrix& m) {
    double t = 0;
    for (int i = 0; i < m.dim(); ++i) t += m.at(i, i);
    return t;
}

Matrix matrix_power(const Matrix& m, int p) {
    Matrix acc = Matrix::identity(m.dim());
    for (int i = 0; i < p; ++i) acc = acc * m;
    return acc;
}

CMatrix to_complex(const Matrix& m) {
    CMatrix c(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) c.at(i, j) = m.at(i, j);
    return c;
}

CMatrix adjoint(const CMatrix& m) {
    CMatrix t(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) t.at(j, i) = std::conj(m.at(i, j));
    return t;
}

bool is_symmetric_matrix(const Matrix& m, double tol) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i + 1; j < m.dim(); ++j)
            if (std::abs(m.at(i, j) - m.at(j, i)) > tol) return false;
    return true;
}

Matrix rotation_matrix(double theta) {
    Matrix m(2);
    m.at(0, 0) = std::cos(theta);
    m.at(0, 1) = -std::sin(theta);
    m.at(1, 0) = std::sin(theta);
    m.at(1, 1) = std::cos(theta);
    return m;
}

namespace {

Eigen::MatrixXd to_eigen(const Matrix& m) {
    Eigen::MatrixXd a(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) a(i, j) = m.at(i, j);
    return a;
}

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
    Eigen::MatrixXcd a(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) a(i, j) = m.at(i, j);
    return a;
}

Spectrum spectrum_impl(const Eigen::MatrixXcd& a,
                       const Eigen::VectorXcd& values,
                       const Eigen::MatrixXcd& vectors,
                       double tol) {
    const double scale = 1.0 + a.norm();
    Spectrum s;
    s.eigenvalues.assign(values.data(), values.data() + values.size());
    for (int i = 0; i < values.size(); ++i) {
        Eigen::VectorXcd v = vectors.col(i);
        double vn = v.norm();
        if (vn == 0.0) throw SpectrumError("eigensolver returned a zero eigenvector");
        double res = (a * v - values(i) * v).norm() / (vn * scale);
        s.residual = std::max(s.residual, res);
    }
    if (s.residual > tol) {
        std::ostringstream msg;
        msg << "eigenvalue residual " << s.residual << " exceeds tolerance " << tol;
        throw SpectrumError(msg.str());
    }
    return s;
}

}  // namespace

Spectrum spectrum(const Matrix& m, double tol) {
    Eigen::MatrixXd a = to_eigen(m);
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, true);
    if (es.info() != Eigen::Success)
        throw SpectrumError("real eigensolver did not converge");
    return spectrum_impl(a.cast<std::complex<double>>(), es.eigenvalues(),
                         es.eigenvectors().cast<std::complex<double>>(), tol);
}

Spectrum spectrum(const CMatrix& m, double tol) {
    Eigen::MatrixXcd a = to_eigen(m);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, true);
    if (es.info() != Eigen::Success)
        throw SpectrumError("complex eigensolver did not converge");
    return spectrum_impl(a, es.eigenvalues(), es.eigenvectors(), tol);
}

double max_imag(const Spectrum& s) {
    double m = 0;
    for (const auto& l : s.eigenvalues) m = std::max(m, std::abs(l.imag()));
    return m;
}

double min_real(const Spectrum& s) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& l : s.eigenvalues) m = std::min(m, l.real());
    return m;
}

bool is_real_spectrum(const Spectrum& s, double imag_tol) {
    return max_imag(s) <= imag_tol;
}

bool is_psd_spectrum(const Spectrum& s, double tol) {
    return max_imag(s) <= tol && min_real(s) >= -tol;
}

double default_spectral_tol(const Matrix& m, double base) {
    return base * (1.0 + frobenius_norm(m));
}

namespace {
constexpr double kSymBindTol = 1e-12;
}

Matrix evaluate(const Word& w, const std::map<int, Matrix>& assignment) {
    if (w.factors.empty()) throw EvalError("cannot evaluate an empty word");
    int n = -1;
    for (const Factor& f : w.factors) {
        auto it = assignment.find(f.var);
        if (it == assignment.end())
            throw EvalError("missing assignment for variable '" + w.var_name(f.var) + "'");
        if (n < 0) n = it->second.dim();
        if (it->second.dim() != n)
            throw EvalError("dimension mismatch for variable '" + w.var_name(f.var) + "'");
        if (f.marker == Marker::Sym && !is_symmetric_matrix(it->second, kSymBindTol))
            throw EvalError("non-symmetric matrix bound to symmetric variable '" +
                            w.var_name(f.var) + "'");
    }
    Matrix p = Matrix::identity(n);
    for (const Factor& f : w.factors) {
        const Matrix& a = assignment.at(f.var);
        p = (f.marker == Marker::Transpose) ? p * a.transpose() : p * a;
    }
    return p;
}

CMatrix evaluate_complex(const Word& w, const std::map<int, CMatrix>& assignment) {
    if (w.factors.empty()) throw EvalError("cannot evaluate an empty word");
    int n = -1;
    for (const Factor& f : w.factors) {
        if (f.marker == Marker::Sym)
            throw EvalError("complex evaluation does not support symmetric variables");
        auto it = assignment.find(f.var);
        if (it == assignment.end())
            throw EvalError("missing assignment for variable '" + w.var_name(f.var) + "'");
        if (n < 0) n = it->second.dim();
        if (it->second.dim() != n)
            throw EvalError("dimension mismatch for variable '" + w.var_name(f.var) + "'");
    }
    CMatrix p = CMatrix::identity(n);
    for (const Factor& f : w.factors) {
        const CMatrix& a = assignment.at(f.var);
        p = (f.marker == Marker::Transpose) ? p * adjoint(a) : p * a;
    }
    return p;
}

std::string write_matrix(const Matrix& m) {
    std::ostringstream out;
    out.precision(17);
    out << m.dim() << '\n';
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::string write_matrix(const CMatrix& m) {
    std::ostringstream out;
    out.precision(17);
    out << m.dim() << '\n';
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out << ' ';
            const auto& z = m.at(i, j);
            out << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
        }
        out << '\n';
    }
    return out.str();
}

Matrix read_matrix(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw EvalError("matrix file: missing dimension line");
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> m.at(i, j))) throw EvalError("matrix file: truncated entries");
    return m;
}

std::map<std::string, Matrix> read_assignment_file(std::istream& in) {
    std::map<std::string, Matrix> out;
    std::string keyword;
    while (in >> keyword) {
        if (keyword != "var")
            throw EvalError("assignment file: expected 'var NAME', got '" + keyword + "'");
        std::string name;
        if (!(in >> name)) throw EvalError("assignment file: missing variable name");
        out.insert_or_assign(name, read_matrix(in));
    }
    if (out.empty()) throw EvalError("assignment file: no matrices found");
    return out;
}

std::string write_assignment_file(const std::map<std::string, Matrix>& by_name) {
    std::string out;
    for (const auto& [name, m] : by_name) {
        out += "var " + name + "\n";
        out += write_matrix(m);
    }
    return out;
}

}  // namespace matword
