// Copyright 2026 The kscheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kscheck/reproduce.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "kscheck/error.h"
#include "kscheck/frames.h"
#include "kscheck/inequality.h"
#include "kscheck/oracles.h"
#include "kscheck/symmetrizer.h"

namespace kscheck::cli {
namespace {

struct Context {
  const ReproduceOptions& options;

  VectorSet set(const std::string& name) const {
    auto it = options.overrides.find(name);
    if (it != options.overrides.end()) return it->second;
    return *builtin_set(name);
  }
};

// A check fills `detail` and returns whether it passed.
using CheckFn = std::function<bool(const Context&, std::ostringstream&)>;

bool check_dimensions(const Context&, std::ostringstream& out) {
  const auto s = dim_symmetric(2, 3);
  const auto a = dim_antisymmetric(2, 3);
  out << "dim_S(2,3)=" << s.get_str() << " dim_A(2,3)=" << a.get_str();
  bool ok = s == 6 && a == 3;
  for (int d = 2; d <= 8; ++d) {
    if (dim_antisymmetric(d, d) != 1) {
      out << " dim_A(" << d << "," << d << ")!=1";
      ok = false;
    }
  }
  if (ok) out << " dim_A(d,d)=1 for d=2..8";
  return ok;
}

bool check_no_dimension_two(const Context&, std::ostringstream& out) {
  const bool ok = scan_no_dim_two(20, 20);
  out << (ok ? "no dimension 2 for 2<=n,d<=20" : "dimension 2 found");
  return ok;
}

bool check_paper_bases(const Context&, std::ostringstream& out) {
  const auto boson = paper_basis(PaperBasis::kBosonTwoQutrits);
  const auto fermion = paper_basis(PaperBasis::kFermionTwoQutrits);
  const auto cb = check_basis(boson);
  const auto cf = check_basis(fermion);
  const bool match = equal_up_to_sign_and_order(
      generate_basis(Scenario::make(2, 3, Statistics::kFermionic)), fermion);
  out << "boson orth=" << cb.pairwise_orthogonal << " sym=" << cb.symmetry
      << "; fermion orth=" << cf.pairwise_orthogonal << " sym=" << cf.symmetry
      << "; generated fermion basis matches=" << match;
  return cb.pairwise_orthogonal && cb.symmetry && cf.pairwise_orthogonal &&
         cf.symmetry && match;
}

bool check_counts(const Context& ctx, std::ostringstream& out) {
  const auto a3 = ctx.set("A3");
  const auto s4 = ctx.set("S4");
  const auto s6 = ctx.set("S6");
  out << "|A3|=" << a3.size() << " |S4|=" << s4.size() << " |S6|=" << s6.size();
  bool ok = a3.size() == kA3Size && s4.size() == kS4Size && s6.size() == kS6Size;

  const auto c = s6_construction();
  std::size_t overlap = 0;
  for (const auto& v : c.leading.members()) {
    overlap += std::count(c.trailing.members().begin(),
                          c.trailing.members().end(), v);
  }
  const auto both = set_intersection(c.leading, c.trailing);
  const auto base = set_union(c.leading, c.trailing);
  bool removals_present = true;
  for (const auto& v : c.removed.members()) removals_present &= base.contains(v);
  bool additions_new = true;
  for (const auto& v : c.added.members()) additions_new &= !base.contains(v);
  const std::size_t closed = c.leading.size() + c.trailing.size() - overlap +
                             c.added.size() - c.removed.size();
  out << "; S6 " << c.leading.size() + c.trailing.size() << "-" << overlap << "+"
      << c.added.size() << "-" << c.removed.size() << "=" << closed;
  ok = ok && overlap == both.size() && removals_present && additions_new &&
       closed == c.result.size() && c.result == s6;
  return ok;
}

std::set<Frame> reference_triads() {
  std::set<Frame> out;
  for (const auto& t : a3_reference_frames()) {
    out.insert(Frame::make({t.begin(), t.end()}));
  }
  return out;
}

bool check_frames(const Context& ctx, std::ostringstream& out) {
  const auto frames = enumerate_frames(ctx.set("A3"));
  const auto reference = reference_triads();
  const std::set<Frame> found(frames.begin(), frames.end());
  std::size_t surplus = 0;
  for (const auto& f : found) surplus += !reference.contains(f);
  std::size_t deficit = 0;
  for (const auto& f : reference) deficit += !found.contains(f);
  out << "triads=" << frames.size() << " surplus=" << surplus
      << " deficit=" << deficit;
  return frames.size() == reference.size() && surplus == 0 && deficit == 0;
}

bool check_shared_index(const Context&, std::ostringstream& out) {
  const auto contexts = a3_reference_frames();
  const auto index = shared_vector_index(contexts);
  auto slots = [&](const Direction& v) {
    std::vector<ContextSlot> s;
    if (auto it = index.find(v); it != index.end()) s = it->second;
    return s;
  };
  const auto e1 = slots(Direction::canonicalize({1, 0, 0}));
  const auto m = slots(Direction::canonicalize({0, 1, -1}));
  auto show = [&](const std::vector<ContextSlot>& s) {
    std::string r;
    for (const auto& c : s) {
      if (!r.empty()) r += ",";
      r += std::to_string(c.context + 1) + "." + std::to_string(c.position + 1);
    }
    return r;
  };
  out << "(1,0,0) in " << show(e1) << "; (0,1,-1) in " << show(m);
  const std::vector<ContextSlot> want_e1{{0, 0}, {1, 0}, {4, 0}, {5, 0}};
  const std::vector<ContextSlot> want_m{{1, 2}, {10, 1}};
  return e1 == want_e1 && m == want_m;
}

bool check_non_colorability(const Context& ctx, std::ostringstream& out) {
  bool ok = true;
  for (const char* name : {"S4", "A3", "S6"}) {
    const auto s = ctx.set(name);
    const auto frames = enumerate_frames(s);
    const bool colorable = is_colorable(ks_colorable(s, frames));
    out << name << ":" << frames.size() << " frames "
        << (colorable ? "Colorable" : "NotColorable") << "; ";
    ok &= !colorable && !frames.empty();
  }
  const auto toy = VectorSet::make(
      "toy", 3,
      {Direction::canonicalize({1, 0, 0}), Direction::canonicalize({0, 1, 0}),
       Direction::canonicalize({0, 0, 1}), Direction::canonicalize({0, 1, 1}),
       Direction::canonicalize({0, 1, -1})});
  const auto toy_frames = enumerate_frames(toy);
  const auto r = ks_colorable(toy, toy_frames);
  const bool toy_ok =
      is_colorable(r) && !std::get<Colorable>(r).vacuous &&
      validate_coloring(toy, toy_frames, std::get<Colorable>(r).assignment);
  out << "toy witness valid=" << toy_ok;
  const auto s6 = ctx.set("S6");
  const bool agree = enumerate_frames(s6) == enumerate_frames_naive(s6);
  out << "; S6 clique search agrees with 6-subset scan=" << agree;
  return ok && toy_ok && agree;
}

bool check_bounds(const Context& ctx, std::ostringstream& out) {
  const auto frames = enumerate_frames(ctx.set("A3"));
  const auto bound = noncontextual_bound(frames);
  const int witness_beta = classical_beta(bound.witness, frames);
  const int algebraic = algebraic_bound(frames);
  const auto sweep = oracle::compare_bound_on_subcollections(frames, 20);
  out << "noncontextual=" << bound.value << " (expected 15) witness_beta="
      << witness_beta << " algebraic=" << algebraic << " (expected 17)"
      << "; subcollections=" << sweep.subcollections_checked
      << " disagreements=" << sweep.disagreements;
  return bound.value == 15 && witness_beta == bound.value && algebraic == 17 &&
         sweep.disagreements == 0 && sweep.subcollections_checked > 0;
}

bool check_operator_identity(const Context& ctx, std::ostringstream& out) {
  const auto frames = enumerate_frames(ctx.set("A3"));
  const auto id = RationalMatrix::identity(3);
  std::size_t identities = 0;
  for (const auto& f : frames) identities += frame_operator(f) == id;
  out << identities << "/" << frames.size() << " frame operators equal I";
  return !frames.empty() && identities == frames.size() && frames.size() == 17;
}

bool check_state_independence(const Context& ctx, std::ostringstream& out) {
  const auto frames = enumerate_frames(ctx.set("A3"));
  std::mt19937_64 rng(ctx.options.seed);
  std::size_t hits = 0;
  std::size_t total = 0;
  auto test = [&](const std::vector<std::int64_t>& amps) {
    ++total;
    hits += quantum_value(frames, QuantumState::from_integers(amps)) == 17;
  };
  for (int i = 0; i < 100; ++i) test(random_amplitudes(rng, 3));
  test({1, 0, 0});
  test({0, 1, 0});
  test({0, 0, 1});
  out << hits << "/" << total << " states give exactly 17 (seed "
      << ctx.options.seed << ")";
  return hits == total;
}

bool check_lifting(const Context& ctx, std::ostringstream& out) {
  const auto fermion = paper_basis(PaperBasis::kFermionTwoQutrits);
  const auto boson = paper_basis(PaperBasis::kBosonTwoQutrits);
  const auto a3 = ctx.set("A3");
  const auto s6 = ctx.set("S6");
  std::size_t a_ok = 0;
  for (const auto& v : a3.members()) {
    a_ok += verify_symmetry(lift(v, fermion), Statistics::kFermionic);
  }
  std::size_t s_ok = 0;
  for (const auto& v : s6.members()) {
    s_ok += verify_symmetry(lift(v, boson), Statistics::kBosonic);
  }
  out << "A3 antisymmetric " << a_ok << "/" << a3.size() << "; S6 symmetric "
      << s_ok << "/" << s6.size();
  return a_ok == a3.size() && s_ok == s6.size();
}

}  // namespace

std::vector<std::int64_t> random_amplitudes(std::mt19937_64& rng,
                                            std::size_t dim) {
  std::uniform_int_distribution<std::int64_t> dist(-9, 9);
  std::vector<std::int64_t> out(dim);
  do {
    for (auto& x : out) x = dist(rng);
  } while (std::all_of(out.begin(), out.end(), [](auto x) { return x == 0; }));
  return out;
}

std::vector<CheckResult> run_checks(const ReproduceOptions& options) {
  const std::vector<std::pair<std::string, CheckFn>> checks{
      {"subspace dimensions", check_dimensions},
      {"no dimension-2 subspace", check_no_dimension_two},
      {"two-qutrit bases", check_paper_bases},
      {"vector set counts", check_counts},
      {"A3 triad enumeration", check_frames},
      {"shared-vector index", check_shared_index},
      {"KS non-colourability", check_non_colorability},
      {"noncontextual bound", check_bounds},
      {"frame operator identity", check_operator_identity},
      {"state independence", check_state_independence},
      {"lifting symmetry", check_lifting},
  };
  const Context ctx{options};
  std::vector<CheckResult> results;
  bool failed = false;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CheckResult r{static_cast<int>(i + 1), checks[i].first, false, false, ""};
    if (failed && options.stop_on_failure) {
      r.skipped = true;
      results.push_back(std::move(r));
      continue;
    }
    std::ostringstream detail;
    detail << std::boolalpha;
    try {
      r.passed = checks[i].second(ctx, detail);
    } catch (const std::exception& e) {
      detail << " error: " << e.what();
      r.passed = false;
    }
    r.detail = detail.str();
    failed |= !r.passed;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace kscheck::cli
