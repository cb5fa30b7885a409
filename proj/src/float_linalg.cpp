#include "ricsol/float_linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace ricsol {

namespace {

Eigen::MatrixXd to_eigen(const Mat<double>& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

Mat<double> from_eigen(const Eigen::MatrixXd& m) {
  Mat<double> a(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return a;
}

double sv_cutoff(const Eigen::VectorXd& sv, double rel_tol) {
  const double smax = sv.size() ? sv(0) : 0.0;
  return std::max(rel_tol, 1e-10) * smax;
}

} // namespace

std::vector<Vec<double>> float_nullspace(const Mat<double>& a, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a), Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cut = sv_cutoff(sv, rel_tol);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;

  const Eigen::MatrixXd& v = svd.matrixV();
  std::vector<Vec<double>> basis;
  for (Eigen::Index j = rank; j < v.cols(); ++j) {
    Vec<double> col(static_cast<std::size_t>(v.rows()));
    for (Eigen::Index i = 0; i < v.rows(); ++i) col[static_cast<std::size_t>(i)] = v(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

std::size_t float_rank(const Mat<double>& a, double rel_tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a));
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cut = sv_cutoff(sv, rel_tol);
  std::size_t rank = 0;
  while (rank < static_cast<std::size_t>(sv.size()) && sv(static_cast<Eigen::Index>(rank)) > cut)
    ++rank;
  return rank;
}

std::vector<Vec<double>> float_row_space(const Mat<double>& a, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a), Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cut = sv_cutoff(sv, rel_tol);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;

  const Eigen::MatrixXd& v = svd.matrixV();
  std::vector<Vec<double>> basis;
  for (Eigen::Index j = 0; j < rank; ++j) {
    Vec<double> col(static_cast<std::size_t>(v.rows()));
    for (Eigen::Index i = 0; i < v.rows(); ++i) col[static_cast<std::size_t>(i)] = v(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

LstsqResult float_lstsq_minnorm(const Mat<double>& a, const Vec<double>& b, double rel_tol) {
  Eigen::MatrixXd m = to_eigen(a);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = b[i];

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cut = sv_cutoff(sv, rel_tol);

  // Min-norm solution with hard cutoff: directions with sigma <= cut get 0.
  Eigen::VectorXd utb = svd.matrixU().transpose() * rhs;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) w(i) = utb(i) / sv(i);
  Eigen::VectorXd x = svd.matrixV() * w;

  LstsqResult out;
  out.x.resize(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) out.x[static_cast<std::size_t>(i)] = x(i);
  out.residual_sq = (rhs - m * x).squaredNorm();
  return out;
}

std::vector<std::complex<double>> float_eigenvalues(const Mat<double>& a) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(a), /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(es.eigenvalues().size()));
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    out.push_back(es.eigenvalues()(i));
  return out;
}

bool float_is_spd(const Mat<double>& a) {
  if (a.rows() != a.cols() || a.rows() == 0) return false;
  Eigen::LLT<Eigen::MatrixXd> llt(to_eigen(a));
  return llt.info() == Eigen::Success;
}

std::optional<Mat<double>> float_cholesky(const Mat<double>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  Eigen::LLT<Eigen::MatrixXd> llt(to_eigen(a));
  if (llt.info() != Eigen::Success) return std::nullopt;
  return from_eigen(Eigen::MatrixXd(llt.matrixL()));
}

std::optional<Mat<double>> float_invert(const Mat<double>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  Eigen::MatrixXd m = to_eigen(a);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  if (!lu.isInvertible()) return std::nullopt;
  return from_eigen(lu.inverse());
}

} // namespace ricsol
