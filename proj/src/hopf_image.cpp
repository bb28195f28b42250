#include "hopf/hopf_image.hpp"

namespace hopf {

const char *to_string(ImageAlgorithm a) { return a == ImageAlgorithm::fixpoint ? "fixpoint" : "words"; }

namespace {

// {u in J : Delta(u) in J (x) H + H (x) J}, using (A (x) A) vec(M) = vec(A M A^T)
// with A the annihilator of J.
Subspace coideal_step(const HopfAlgebra &h, const Subspace &j) {
  if (j.is_zero() || j.is_full())
    return j;
  const std::size_t d = h.dim();
  const Matrix a = j.annihilator();
  const Matrix at = a.transpose();
  const std::size_t c = a.rows();
  std::vector<Vector> cols;
  for (const auto &u : j.basis()) {
    Vector du = h.comultiply(u);
    Matrix m(h.field(), d, d);
    for (std::size_t i = 0; i < d * d; ++i)
      m(i / d, i % d) = du[i];
    Matrix img = a * m * at;
    Vector col;
    col.reserve(c * c);
    for (std::size_t r = 0; r < c; ++r)
      for (std::size_t s = 0; s < c; ++s)
        col.push_back(img(r, s));
    cols.push_back(std::move(col));
  }
  Matrix sys = Matrix::from_columns(h.field(), c * c, cols);
  Subspace ys = kernel(sys);
  const Matrix bt = j.basis_matrix().transpose();
  std::vector<Vector> out;
  for (const auto &y : ys.basis())
    out.push_back(bt * y);
  return Subspace::span(h.field(), d, std::move(out));
}

Subspace star_image(const HopfAlgebra &h, const Subspace &j) {
  std::vector<Vector> imgs;
  for (const auto &u : j.basis())
    imgs.push_back(*h.star_matrix() * conj(h.k(), u));
  return Subspace::span(h.field(), h.dim(), std::move(imgs));
}

Subspace ideal_step(const HopfAlgebra &h, Subspace j) {
  for (std::size_t i = 0; i < h.dim() && !j.is_zero(); ++i) {
    Vector e = h.basis_vector(i);
    j = restricted_preimage(j, h.left_mult_matrix(e), j);
    j = restricted_preimage(j, h.right_mult_matrix(e), j);
  }
  return j;
}

} // namespace

HopfImageResult largest_hopf_ideal_in(const HopfAlgebra &h, const Subspace &start, const IdealSearchOptions &opts) {
  if (start.ambient_dim() != h.dim())
    throw InputError("start subspace does not live in the algebra");
  if (opts.star_stable && !h.star_matrix())
    throw InputError("algebra has no *-structure");
  const std::size_t t = antipode_order(h, opts.antipode_cap);
  Matrix eps(h.field(), 1, h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    eps(0, i) = h.counit_vector()[i];
  Subspace j = restricted_kernel(start, eps);
  Matrix sk = Matrix::identity(h.field(), h.dim());
  for (std::size_t k = 1; k < t && !j.is_zero(); ++k) {
    sk = h.antipode_matrix() * sk;
    j = restricted_preimage(j, sk, start);
  }

  HopfImageResult r;
  r.algorithm = ImageAlgorithm::fixpoint;
  r.dimension_chain.push_back(j.dim());
  while (!j.is_zero()) {
    Subspace next = coideal_step(h, j);
    next = restricted_preimage(next, h.antipode_matrix(), j);
    if (opts.star_stable)
      next = intersect(next, star_image(h, j));
    if (opts.enforce_ideal)
      next = ideal_step(h, next);
    ++r.iterations;
    if (next == j)
      break;
    j = std::move(next);
    r.dimension_chain.push_back(j.dim());
  }
  r.ideal = std::move(j);
  r.inner_faithful = r.ideal.is_zero();
  r.stabilized = true;
  return r;
}

HopfImageResult hopf_image_fixpoint(const Representation &pi, std::optional<std::size_t> antipode_cap) {
  if (!verify_rep(pi).passed())
    throw MathError("not a representation");
  IdealSearchOptions opts;
  opts.antipode_cap = antipode_cap;
  return largest_hopf_ideal_in(*pi.algebra(), rep_kernel(pi), opts);
}

HopfImageResult hopf_image_words(const Representation &pi, std::size_t max_len,
                                 std::optional<std::size_t> antipode_cap) {
  if (max_len == 0)
    throw InputError("max_len must be at least 1");
  if (!verify_rep(pi).passed())
    throw MathError("not a representation");
  const HopfAlgebra &h = *pi.algebra();
  const std::size_t t = antipode_order(h, antipode_cap);

  std::vector<Representation> letters;
  for (std::size_t k = 0; k < t; ++k)
    letters.push_back(k == 0 ? pi : dual_rep(letters.back()));

  HopfImageResult r;
  r.algorithm = ImageAlgorithm::words;
  Subspace running = rep_kernel(trivial_rep(pi.algebra()));
  std::size_t processed = 1;
  r.dimension_chain.push_back(running.dim());
  bool seen_alpha0 = false;

  auto absorb = [&](const Representation &rep) {
    Subspace next = intersect(running, rep_kernel(rep));
    ++processed;
    bool changed = !(next == running) || !seen_alpha0;
    seen_alpha0 = true;
    if (!(next == running))
      r.dimension_chain.push_back(next.dim());
    running = std::move(next);
    return changed && is_hopf_ideal(h, running).passed();
  };

  std::vector<Representation> level;
  for (std::size_t len = 1; len <= max_len; ++len) {
    r.iterations = len;
    std::vector<Representation> next_level;
    if (len == 1) {
      for (const auto &l : letters) {
        next_level.push_back(l);
        if (absorb(l)) {
          r.stabilized = true;
          break;
        }
      }
    } else {
      for (const auto &w : level) {
        for (const auto &l : letters) {
          next_level.push_back(tensor_rep(w, l));
          if (absorb(next_level.back())) {
            r.stabilized = true;
            break;
          }
        }
        if (r.stabilized)
          break;
      }
    }
    if (r.stabilized)
      break;
    level = std::move(next_level);
  }
  r.words_processed = processed;
  r.ideal = std::move(running);
  r.inner_faithful = r.stabilized && r.ideal.is_zero();
  return r;
}

bool inner_faithful(const Representation &pi) { return hopf_image_fixpoint(pi).inner_faithful; }

Representation factor_through(const Representation &pi, const HopfQuotient &q) {
  std::vector<Matrix> mats;
  for (std::size_t c = 0; c < q.section.cols(); ++c)
    mats.push_back(pi.image(q.section.column(c)));
  return Representation(q.algebra, pi.dim(), std::move(mats));
}

HopfImage hopf_image_quotient(const Representation &pi) {
  HopfImageResult r = hopf_image_fixpoint(pi);
  HopfQuotient q = quotient_hopf(pi.algebra(), r.ideal);
  Representation factored = factor_through(pi, q);
  return {std::move(q), std::move(factored), std::move(r.ideal)};
}

} // namespace hopf
