#include "cubal/verify.hpp"

#include <algorithm>

#include "cubal/cubic_matrix.hpp"
#include "cubal/structure.hpp"

namespace cubal {

namespace {

std::vector<CubicMatrix> basis_of(int m) {
  std::vector<CubicMatrix> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) out.push_back(CubicMatrix::basis(m, i, j, k));
  return out;
}

bool check_theorem_1(const Operation& a) {
  for (const auto& pi : Permutation::all(a.size()))
    if (!verify_isomorphism(a, act(pi, a), pi)) return false;
  return true;
}

bool check_theorem_2(const Operation& a, std::size_t& count) {
  const auto chars = character_search(a);
  count = chars.size();
  for (const auto& chi : chars)
    if (!is_character(chi, a)) return false;
  if (a.size() >= 2) return chars.empty();
  LinearForm<Scalar> unit(1);
  unit(0, 0, 0) = 1;
  return chars.size() == 1 && chars.front() == unit;
}

bool check_theorem_3(const Operation& a) {
  const int m = a.size();
  const auto basis = basis_of(m);
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (phi(mul(x, y, a)) != accompanying_mul(phi(x), phi(y))) return false;
  // Onto: the images of the basis span all m^2 coordinates.
  Matrix images(static_cast<std::size_t>(m * m), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto u = phi(basis[c]);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) images(static_cast<std::size_t>(i * m + j), c) = u(i, j);
  }
  return rank(images) == static_cast<std::size_t>(m * m);
}

bool check_theorem_4(const Operation& a, const std::vector<Subset>& invariant, std::mt19937_64& rng,
                     int samples, std::vector<std::string>& failures) {
  const int m = a.size();
  bool ok = true;
  auto fail = [&](std::string why) {
    ok = false;
    failures.push_back(std::move(why));
  };

  std::vector<Subset> nonempty;
  std::copy_if(invariant.begin(), invariant.end(), std::back_inserter(nonempty),
               [](const Subset& s) { return !s.is_empty(); });

  for (const auto& j : nonempty) {
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) {
        const auto span = subalgebra_span(a, j, i, k);
        if (!is_subalgebra(span, a)) fail("theorem_4: span of an invariant set is not closed");
        // Distinct blocks meet only in zero.
        for (int i2 = 0; i2 < m; ++i2)
          for (int k2 = 0; k2 < m; ++k2)
            if ((i2 != i || k2 != k) && !intersect(span, subalgebra_span(a, j, i2, k2)).is_zero())
              fail("theorem_4: distinct blocks intersect");
        for (const auto& j2 : nonempty) {
          const auto other = subalgebra_span(a, j2, i, k);
          if (j.is_subset_of(j2) && !span.is_subspace_of(other)) fail("theorem_4: inclusion not preserved");
          if ((j & j2).is_empty() && !intersect(span, other).is_zero())
            fail("theorem_4: disjoint invariant sets give intersecting spans");
        }
      }
  }

  // Closures of singletons are invariant and generate subalgebras.
  for (int x = 0; x < m; ++x) {
    const auto c = closure(Subset::of(m, {x}), a);
    if (!is_invariant(c, a) || !is_subalgebra(subalgebra_span(a, c, 0, 0), a))
      fail("closure of a singleton does not give a subalgebra");
  }

  if (!is_ideal(ideal_Ia_span(a), a)) fail("theorem_4: image span is not an ideal");

  for (int s = 0; s < samples; ++s) {
    const auto x = random_kernel_element(m, rng);
    const auto y = random_cubic_matrix(m, rng);
    if (!in_ideal_Ia0(x) || !in_ideal_Ia0(mul(x, y, a)) || !in_ideal_Ia0(mul(y, x, a)))
      fail("theorem_4: kernel of phi is not a two-sided ideal");
  }
  return ok;
}

bool check_symmetric_forms(const Operation& a, std::size_t orbit_size, Symmetry symmetry) {
  const bool sym = is_symmetric(a);
  return sym == (orbit_size == 1) && sym == (symmetry != Symmetry::None);
}

// Classifies E_jij^[0], E_jij^[1], ... from the matrices alone and compares
// with the index sequence i_n.
bool check_plenary(const Operation& a, const std::vector<SequenceClass>& sequences) {
  const int m = a.size();
  for (int i = 0; i < m; ++i) {
    const auto& expected = sequences[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j) {
      std::vector<CubicMatrix> terms{CubicMatrix::basis(m, j, i, j)};
      int x = i;
      int entry = -1;
      int period = 0;
      for (int n = 1; n <= 2 * m; ++n) {
        terms.push_back(mul(terms.back(), terms.back(), a));
        x = a(x, x);
        if (terms.back() != CubicMatrix::basis(m, j, x, j)) return false;
        if (entry < 0) {
          const auto first = std::find(terms.begin(), terms.end() - 1, terms.back());
          if (first != terms.end() - 1) {
            entry = static_cast<int>(first - terms.begin());
            period = n - entry;
          }
        }
      }
      if (entry != expected.entry || period != expected.period) return false;
    }
  }
  return true;
}

bool check_zero_divisors(const Operation& a, Symmetry symmetry, std::mt19937_64& rng, int samples,
                         std::vector<std::string>& failures) {
  if (symmetry == Symmetry::None) return true;
  const int m = a.size();
  // Right-symmetric: left witness <=> det B = 0, right witness always (m >= 2).
  // Left-symmetric: the mirror image.
  const bool det_side_left = symmetry != Symmetry::Left;
  bool ok = true;
  for (int s = 0; s < samples; ++s) {
    auto x = random_cubic_matrix(m, rng);
    if (s % 2 == 1) {
      // Make B singular: copy row 0 of B onto row m-1 (m == 1: zero it).
      const auto b = accompanying_matrix(x);
      const int last = m - 1;
      for (int k = 0; k < m; ++k) {
        const Scalar target = m == 1 ? Scalar(0) : Scalar(b(0, static_cast<std::size_t>(k)));
        x(last, 0, k) += target - b(static_cast<std::size_t>(last), static_cast<std::size_t>(k));
      }
    }
    const bool singular = sgn(det(accompanying_matrix(x))) == 0;
    const auto left = left_zero_divisor_witness(x, a);
    const auto right = right_zero_divisor_witness(x, a);
    if (left && (left->is_zero() || !mul(x, *left, a).is_zero())) ok = false;
    if (right && (right->is_zero() || !mul(*right, x, a).is_zero())) ok = false;
    const bool det_side = det_side_left ? left.has_value() : right.has_value();
    const bool other_side = det_side_left ? right.has_value() : left.has_value();
    if (det_side != singular) ok = false;
    if (m >= 2 && !other_side) ok = false;
  }
  if (!ok) failures.push_back("zero divisors: symmetric-operation criteria violated");
  return ok;
}

}  // namespace

bool OperationReport::all_passed() const {
  return associative && theorem_1 && theorem_2 && theorem_3 && theorem_4 && commutativity &&
         symmetric_forms && plenary_powers && zero_divisors;
}

CubicMatrix random_cubic_matrix(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  CubicMatrix out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Scalar v(num(rng), den(rng));
        v.canonicalize();
        out(i, j, k) = v;
      }
  return out;
}

CubicMatrix random_kernel_element(int m, std::mt19937_64& rng) {
  auto x = random_cubic_matrix(m, rng);
  const auto u = phi(x);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) x(i, 0, j) -= u(i, j);
  return x;
}

OperationReport verify_operation(const Operation& a, const VerifyOptions& options) {
  if (a.size() > kMaxVerifySize)
    throw CapacityError("theorem verification is limited to m <= " + std::to_string(kMaxVerifySize));
  std::mt19937_64 rng(options.seed);
  OperationReport r(a);
  const int m = a.size();

  r.associative = is_associative(a);
  if (!r.associative) {
    r.failures.push_back("operation is not associative");
    return r;
  }
  r.orbit_size = orbit(a).size();
  r.symmetry = symmetry_class(a);
  r.invariant_subsets = enumerate_invariant_subsets(a);
  for (int i = 0; i < m; ++i) r.sequences.push_back(power_sequence_classify(i, a));
  r.noncommuting_pair = noncommutativity_witness(a);

  auto note = [&](bool passed, const char* name) {
    if (!passed) r.failures.push_back(name);
    return passed;
  };
  r.theorem_1 = note(check_theorem_1(a), "theorem_1");
  r.theorem_2 = note(check_theorem_2(a, r.character_count), "theorem_2");
  r.theorem_3 = note(check_theorem_3(a), "theorem_3");
  r.theorem_4 = check_theorem_4(a, r.invariant_subsets, rng, options.random_samples, r.failures);
  r.commutativity = note(r.noncommuting_pair.has_value() == (m >= 2), "commutativity");
  r.symmetric_forms = note(check_symmetric_forms(a, r.orbit_size, r.symmetry), "symmetric_forms");
  r.plenary_powers = note(check_plenary(a, r.sequences), "plenary_powers");
  r.zero_divisors = check_zero_divisors(a, r.symmetry, rng, options.random_samples, r.failures);
  return r;
}

Json to_json(const OperationReport& r) {
  Json out;
  out["operation"] = table_json(r.operation);
  out["associative"] = r.associative;
  out["theorem_1"] = r.theorem_1;
  out["theorem_2"] = r.theorem_2;
  out["theorem_3"] = r.theorem_3;
  out["theorem_4"] = r.theorem_4;
  out["commutativity"] = r.commutativity;
  out["symmetric_forms"] = r.symmetric_forms;
  out["plenary_powers"] = r.plenary_powers;
  out["zero_divisors"] = r.zero_divisors;
  out["passed"] = r.all_passed();

  Json w;
  w["orbit_size"] = r.orbit_size;
  w["symmetry"] = to_string(r.symmetry);
  w["character_count"] = r.character_count;
  if (r.noncommuting_pair)
    w["noncommuting_pair"] = Json::array({to_json(r.noncommuting_pair->first), to_json(r.noncommuting_pair->second)});
  else
    w["noncommuting_pair"] = nullptr;
  Json inv = Json::array();
  for (const auto& s : r.invariant_subsets) inv.push_back(to_json(s));
  w["invariant_subsets"] = std::move(inv);
  Json seq = Json::array();
  for (const auto& c : r.sequences) seq.push_back(to_json(c));
  w["power_sequences"] = std::move(seq);
  out["witnesses"] = std::move(w);
  if (!r.failures.empty()) out["failures"] = r.failures;
  return out;
}

}  // namespace cubal
