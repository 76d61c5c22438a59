#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <string>
#include <vector>

#include "illab/error.hpp"
#include "illab/extrapolation.hpp"

namespace illab {

template <class T>
using CMat = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic>;

using Frame = CMat<double>;

enum class LimitStatus { Converged, NotConverged };
const char* to_string(LimitStatus s);

struct SubspaceOptions {
  double gap_tol = 1e-3;
  int tail = 6;
  int passes = 3;
  double floor = 1e-13;
  double cluster_tol = 0.1;
};

template <class T>
struct BasicSubspaceLimit {
  LimitStatus status = LimitStatus::NotConverged;
  std::vector<int> dims;
  std::vector<double> gaps;
  double stability = 0;
  CMat<T> limit;
  CMat<T> limsup;
  CMat<T> liminf;
  std::vector<double> spectrum;
  std::size_t clusters = 0;
  std::string reason;
};

using SubspaceLimit = BasicSubspaceLimit<double>;

// Orthonormal basis of the column space, rank cut at rel_tol * largest singular value.
template <class T>
CMat<T> orthonormalize(const CMat<T>& M, double rel_tol = 1e-9) {
  if (M.cols() == 0 || M.rows() == 0) return CMat<T>(M.rows(), 0);
  Eigen::JacobiSVD<CMat<T>> svd(M, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > static_cast<T>(rel_tol) * s(0)) ++r;
  if (s.size() == 0 || s(0) == T(0)) r = 0;
  return svd.matrixU().leftCols(r);
}

// Sine of the largest principal angle; 1 when dimensions differ.
template <class T>
T subspace_gap(const CMat<T>& A, const CMat<T>& B) {
  if (A.rows() != B.rows()) throw Error(ErrorKind::AmbientMismatch, "frames live in different ambient spaces");
  if (A.cols() != B.cols()) return T(1);
  if (A.cols() == 0) return T(0);
  auto top = [](const CMat<T>& R) {
    Eigen::JacobiSVD<CMat<T>> svd(R);
    return svd.singularValues().size() ? svd.singularValues()(0) : T(0);
  };
  const CMat<T> R1 = B - A * (A.adjoint() * B);
  const CMat<T> R2 = A - B * (B.adjoint() * A);
  return std::min(T(1), std::max(top(R1), top(R2)));
}

template <class T>
CMat<T> projector(const CMat<T>& K) {
  return K * K.adjoint();
}

// Entrywise iterated Aitken on the projectors of the first `count` frames.
template <class T>
CMat<T> extrapolated_projector(const std::vector<CMat<T>>& frames, std::size_t count, int passes) {
  const Eigen::Index d = frames.front().rows();
  std::vector<CMat<T>> P;
  for (std::size_t k = 0; k < count; ++k) P.push_back(projector(frames[k]));
  CMat<T> out(d, d);
  std::vector<std::complex<T>> seq(count);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = r; c < d; ++c) {
      for (std::size_t k = 0; k < count; ++k) seq[k] = P[k](r, c);
      const std::complex<T> v = aitken_limit(seq, passes);
      out(r, c) = v;
      out(c, r) = std::conj(v);
    }
  for (Eigen::Index r = 0; r < d; ++r) out(r, r) = out(r, r).real();
  return out;
}

template <class T>
CMat<T> top_eigenvectors(const CMat<T>& P, Eigen::Index k, std::vector<double>* spectrum = nullptr) {
  Eigen::SelfAdjointEigenSolver<CMat<T>> es(P);
  if (spectrum) {
    spectrum->clear();
    for (Eigen::Index i = es.eigenvalues().size() - 1; i >= 0; --i)
      spectrum->push_back(static_cast<double>(es.eigenvalues()(i)));
  }
  return es.eigenvectors().rightCols(k).rowwise().reverse();
}

template <class T>
BasicSubspaceLimit<T> subspace_limit_impl(const std::vector<CMat<T>>& frames, const SubspaceOptions& opts) {
  BasicSubspaceLimit<T> out;
  if (frames.size() < 4) throw Error(ErrorKind::Config, "subspace_limit needs at least 4 frames");
  const Eigen::Index d = frames.front().rows();
  for (const auto& F : frames) {
    if (F.rows() != d) throw Error(ErrorKind::AmbientMismatch, "frames live in different ambient spaces");
    out.dims.push_back(static_cast<int>(F.cols()));
  }
  for (std::size_t k = 1; k < frames.size(); ++k)
    out.gaps.push_back(static_cast<double>(subspace_gap(frames[k - 1], frames[k])));

  const std::size_t window = static_cast<std::size_t>(std::max(2, opts.tail - 1));
  const bool stable_dim = std::all_of(out.dims.begin(), out.dims.end(), [&](int x) { return x == out.dims.front(); });
  bool ok = stable_dim;
  if (!stable_dim) out.reason = "subspace dimension changes along the schedule";

  const bool monotone = tail_non_increasing(out.gaps, window, opts.floor);
  const bool contracting = tail_contracting(out.gaps, window, opts.floor);
  if (ok && !monotone) {
    ok = false;
    out.reason = "gaps grow in the tail of the schedule";
  }
  if (ok && !contracting) {
    ok = false;
    out.reason = "gaps stall in the tail of the schedule";
  }

  if (ok) {
    const Eigen::Index k = frames.front().cols();
    const std::size_t n = frames.size();
    const int p_all = std::min(opts.passes, static_cast<int>(n - 1) / 2);
    const int p_prev = std::min(opts.passes, static_cast<int>(n - 2) / 2);
    if (k == 0 || k == d) {
      out.limit = frames.back();
      out.stability = 0;
    } else {
      const CMat<T> P = extrapolated_projector(frames, n, p_all);
      const CMat<T> Q = extrapolated_projector(frames, n - 1, p_prev);
      out.limit = top_eigenvectors(P, k, &out.spectrum);
      const CMat<T> prev = top_eigenvectors(Q, k);
      out.stability = static_cast<double>(subspace_gap(out.limit, prev));
      const double lk = out.spectrum[static_cast<std::size_t>(k - 1)];
      const double lk1 = out.spectrum[static_cast<std::size_t>(k)];
      if (!(lk > 0.5 && lk1 < 0.5)) {
        ok = false;
        out.reason = "extrapolated projector has no spectral gap at the subspace dimension";
      }
    }
    if (ok && !(out.stability < opts.gap_tol)) {
      ok = false;
      out.reason = "extrapolated limit moves by " + std::to_string(out.stability) + " when the last sample is dropped";
    }
  }

  if (ok) {
    out.status = LimitStatus::Converged;
    out.limsup = out.liminf = out.limit;
    out.clusters = 1;
    return out;
  }

  const std::size_t n = std::min(frames.size(), static_cast<std::size_t>(opts.tail));
  std::vector<CMat<T>> reps;
  for (std::size_t k = frames.size() - n; k < frames.size(); ++k) {
    bool found = false;
    for (const auto& r : reps)
      if (subspace_gap(r, frames[k]) <= static_cast<T>(opts.cluster_tol)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(frames[k]);
  }
  out.clusters = reps.size();
  Eigen::Index cols = 0;
  for (const auto& r : reps) cols += r.cols();
  CMat<T> all(d, cols);
  Eigen::Index at = 0;
  CMat<T> S = CMat<T>::Zero(d, d);
  for (const auto& r : reps) {
    if (r.cols()) all.middleCols(at, r.cols()) = r;
    at += r.cols();
    S += projector(r);
  }
  out.limsup = orthonormalize<T>(all, 1e-6);
  Eigen::SelfAdjointEigenSolver<CMat<T>> es(S);
  Eigen::Index m = 0;
  for (Eigen::Index i = 0; i < d; ++i)
    if (es.eigenvalues()(i) >= static_cast<T>(reps.size()) - T(1e-6)) ++m;
  out.liminf = es.eigenvectors().rightCols(m);
  return out;
}

SubspaceLimit subspace_limit(const std::vector<Frame>& frames, const SubspaceOptions& opts = {});

}  // namespace illab
