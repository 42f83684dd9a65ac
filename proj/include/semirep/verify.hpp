#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "semirep/band.hpp"
#include "semirep/cmp.hpp"

namespace semirep {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool internal = false;  // failure indicates a library bug, CLI exits 3
  std::string detail;
};

namespace detail {

inline void runCheck(std::vector<CheckResult>& out, const std::string& name,
                     const std::function<bool(std::string&)>& fn) {
  CheckResult r;
  r.name = name;
  try {
    r.pass = fn(r.detail);
  } catch (const Error& e) {
    r.pass = false;
    r.internal = e.cls() == ErrorClass::Internal;
    r.detail = e.what();
  }
  out.push_back(std::move(r));
}

// Fresh principal two-sided ideal, kept separate from green.cpp on purpose.
inline std::vector<bool> principalIdeal(const Semigroup& s, int x) {
  std::vector<bool> in(static_cast<std::size_t>(s.n), false);
  in[static_cast<std::size_t>(x)] = true;
  for (int u = 0; u <= s.n; ++u) {
    const int ux = u == s.n ? x : s.prod(u, x);
    in[static_cast<std::size_t>(ux)] = true;
    for (int v = 0; v < s.n; ++v) in[static_cast<std::size_t>(s.prod(ux, v))] = true;
  }
  return in;
}

}  // namespace detail

/// The combinatorial invariants; field-free.
inline std::vector<CheckResult> greenChecks(const Semigroup& s, const GreenStructure& g) {
  using detail::runCheck;
  std::vector<CheckResult> out;

  runCheck(out, "green/j-equivalence-matches-dag", [&](std::string& detail) {
    const int nj = static_cast<int>(g.jClasses.size());
    // reachability in the (transitively reduced) cover DAG
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(nj),
                                         std::vector<bool>(static_cast<std::size_t>(nj), false));
    for (int a = 0; a < nj; ++a) reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto [lo, hi] : g.jOrderEdges)
        for (int a = 0; a < nj; ++a)
          if (reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(lo)] &&
              !reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(hi)]) {
            reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(hi)] = true;
            grew = true;
          }
    }
    for (int a = 0; a < nj; ++a)
      for (int b = 0; b < nj; ++b)
        if (reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != g.jBelowOrEqual(a, b)) {
          detail = "reachability and ideal containment disagree";
          return false;
        }
    for (int x = 0; x < s.n; ++x)
      for (int y = 0; y < s.n; ++y) {
        const bool sameIdeal =
            detail::principalIdeal(s, x) == detail::principalIdeal(s, y);
        if (sameIdeal != (g.jOf[static_cast<std::size_t>(x)] == g.jOf[static_cast<std::size_t>(y)])) {
          detail = "J-partition disagrees with principal ideal equality";
          return false;
        }
      }
    return true;
  });

  runCheck(out, "green/h-is-r-meet-l", [&](std::string&) {
    for (int x = 0; x < s.n; ++x)
      for (int y = 0; y < s.n; ++y) {
        const bool sameH = g.hOf[static_cast<std::size_t>(x)] == g.hOf[static_cast<std::size_t>(y)];
        const bool meet = g.rOf[static_cast<std::size_t>(x)] == g.rOf[static_cast<std::size_t>(y)] &&
                          g.lOf[static_cast<std::size_t>(x)] == g.lOf[static_cast<std::size_t>(y)];
        if (sameH != meet) return false;
      }
    return true;
  });

  runCheck(out, "green/regularity-two-tests-agree", [&](std::string&) {
    for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
      const auto& cls = g.jClasses[static_cast<std::size_t>(j)];
      bool hasIdem = false, squareMeets = false;
      for (int x : cls) {
        if (s.isIdempotent(x)) hasIdem = true;
        for (int y : cls)
          if (g.jOf[static_cast<std::size_t>(s.prod(x, y))] == j) squareMeets = true;
      }
      if (hasIdem != squareMeets || hasIdem != g.regular[static_cast<std::size_t>(j)]) return false;
    }
    return true;
  });

  runCheck(out, "green/nonregular-classes", [&](std::string&) {
    for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
      if (g.regular[static_cast<std::size_t>(j)]) continue;
      for (int x : g.jClasses[static_cast<std::size_t>(j)]) {
        if (s.isIdempotent(x)) return false;
        for (int y : g.jClasses[static_cast<std::size_t>(j)])
          if (g.jOf[static_cast<std::size_t>(s.prod(x, y))] == j) return false;
      }
    }
    return true;
  });

  runCheck(out, "green/maximal-subgroup-is-eSe-meet-J", [&](std::string&) {
    for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
      if (!g.regular[static_cast<std::size_t>(j)]) continue;
      const int e = g.apexTransversal[static_cast<std::size_t>(j)];
      const MaxSubgroup grp = maximalSubgroup(s, g, e);
      std::vector<int> eSeJ;
      std::vector<bool> seen(static_cast<std::size_t>(s.n), false);
      for (int t = 0; t < s.n; ++t) {
        const int x = s.prod(s.prod(e, t), e);
        if (!seen[static_cast<std::size_t>(x)] && g.jOf[static_cast<std::size_t>(x)] == j) {
          seen[static_cast<std::size_t>(x)] = true;
          eSeJ.push_back(x);
        }
      }
      std::sort(eSeJ.begin(), eSeJ.end());
      if (eSeJ != grp.elements) return false;
    }
    return true;
  });

  runCheck(out, "green/free-action-bijection", [&](std::string&) {
    for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
      if (!g.regular[static_cast<std::size_t>(j)]) continue;
      const JClassData jd = jclassData(s, g, j);
      std::vector<bool> hit(static_cast<std::size_t>(s.n), false);
      std::size_t count = 0;
      for (int gi : jd.group.elements)
        for (int t : jd.lTransversal) {
          const int x = s.prod(gi, t);
          if (jd.rPosOf[static_cast<std::size_t>(x)] < 0) return false;
          if (hit[static_cast<std::size_t>(x)]) return false;
          hit[static_cast<std::size_t>(x)] = true;
          ++count;
        }
      if (count != jd.rClassOfE.size()) return false;
    }
    return true;
  });

  runCheck(out, "green/ideal-partition", [&](std::string&) {
    for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
      const std::vector<int> ideal = idealIJ(s, g, j);
      std::vector<bool> inIdeal(static_cast<std::size_t>(s.n), false);
      for (int x : ideal) inIdeal[static_cast<std::size_t>(x)] = true;
      const auto& cls = g.jClasses[static_cast<std::size_t>(j)];
      for (int x = 0; x < s.n; ++x) {
        const auto pr = detail::principalIdeal(s, x);
        bool containsJ = true;
        for (int y : cls)
          if (!pr[static_cast<std::size_t>(y)]) { containsJ = false; break; }
        if (containsJ == inIdeal[static_cast<std::size_t>(x)]) return false;
      }
    }
    return true;
  });

  runCheck(out, "green/idempotent-witnesses", [&](std::string&) {
    for (int e : g.idempotents)
      for (int f : g.idempotents) {
        const auto w = idempotentsIsomorphic(s, g, e, f);
        const bool sameJ = g.jOf[static_cast<std::size_t>(e)] == g.jOf[static_cast<std::size_t>(f)];
        if (w.has_value() != sameJ) return false;
        if (w && (s.prod(w->first, w->second) != e || s.prod(w->second, w->first) != f))
          return false;
      }
    return true;
  });

  runCheck(out, "schutz/monomial-multiplicative-kills-ideal", [&](std::string&) {
    for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
      if (!g.regular[static_cast<std::size_t>(j)]) continue;
      const JClassData jd = jclassData(s, g, j);
      verifyMonomialRep(s, jd, rightSchutzenberger(s, jd));
      verifyMonomialRep(s, jd, leftSchutzenberger(s, jd));
    }
    return true;
  });

  return out;
}

/// The representation-theoretic invariants over one field.
template <class K>
std::vector<CheckResult> fieldChecks(const Semigroup& s, const GreenStructure& g, const Field& f,
                                     const ChopConfig& cfg, std::uint64_t seed) {
  using detail::runCheck;
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);

  // The pipeline itself: every internal cross-check (radical two ways,
  // minimal two ways, simplicity, apex, restriction, ind/coind agreement)
  // runs inside.
  std::vector<SimpleReport<K>> reports;
  bool pipelineOk = false;
  runCheck(out, "cmp/pipeline-crosschecks", [&](std::string&) {
    reports = allIrreducibles<K>(s, g, f, cfg, rng);
    pipelineOk = true;
    return true;
  });
  if (!pipelineOk) return out;

  runCheck(out, "cmp/simple-actions-multiplicative", [&](std::string&) {
    for (const auto& r : reports)
      if (!isMultiplicative<K>(s, r.simpleModule)) return false;
    return true;
  });

  runCheck(out, "cmp/dimension-arithmetic", [&](std::string&) {
    for (const auto& r : reports) {
      if (r.simpleDim != r.inducedDim - r.radicalDim) return false;
      if (r.simpleDim != r.minimalDim) return false;
      if (!r.isoCheck) return false;
    }
    return true;
  });

  runCheck(out, "cmp/pairwise-nonisomorphic", [&](std::string& detail) {
    for (std::size_t i = 0; i < reports.size(); ++i)
      for (std::size_t j = i + 1; j < reports.size(); ++j) {
        if (reports[i].simpleDim != reports[j].simpleDim) continue;
        if (!homSpace<K>(reports[i].simpleModule, reports[j].simpleModule).empty()) {
          detail = "simples " + std::to_string(i) + " and " + std::to_string(j) + " isomorphic";
          return false;
        }
      }
    return true;
  });

  runCheck(out, "cmp/radical-annihilated-by-Se", [&](std::string&) {
    for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
      if (!g.regular[static_cast<std::size_t>(j)]) continue;
      const JClassData jd = jclassData(s, g, j);
      const MonomialRep rho = rightSchutzenberger(s, jd);
      for (const GModule<K>& v : irreducibles<K>(s, jd.group, f, cfg, rng)) {
        const SModule<K> ind = induce<K>(v, jd, rho, s);
        const Mat<K> n = radicalN<K>(ind, jd, v);
        for (int x = 0; x < s.n; ++x) {
          Mat<K> image = n * ind.actions[static_cast<std::size_t>(x)] *
                         ind.actions[static_cast<std::size_t>(jd.eJ)];
          if (!isZeroMat(image)) return false;
        }
      }
    }
    return true;
  });

  runCheck(out, "cmp/minimal-submodule-detected-from-everywhere", [&](std::string&) {
    for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
      if (!g.regular[static_cast<std::size_t>(j)]) continue;
      const JClassData jd = jclassData(s, g, j);
      const MonomialRep lambda = leftSchutzenberger(s, jd);
      for (const GModule<K>& v : irreducibles<K>(s, jd.group, f, cfg, rng)) {
        const SModule<K> coind = coinduce<K>(v, jd, lambda, s);
        const Mat<K> minimal = minimalL<K>(coind, jd, v);
        const Rref<K> minimalRref = rref(minimal);
        auto containsMinimal = [&](const Mat<K>& seed) {
          const Mat<K> span = spin<K>(seed, Actions<K>(coind.actions), coind.dim, f);
          const Rref<K> spanRref = rref(span);
          for (Index i = 0; i < minimalRref.rank(); ++i)
            if (!inRowSpace(spanRref, RowVec<K>(minimalRref.mat.row(i)))) return false;
          return true;
        };
        if (withinExhaustiveCap(f, coind.dim, 12)) {
          bool ok = true;
          forEachProjectiveVector<K>(f, coind.dim, [&](const Mat<K>& v2) {
            ok = containsMinimal(v2);
            return ok;
          });
          if (!ok) return false;
        } else {
          for (Index i = 0; i < coind.dim; ++i) {
            Mat<K> e = zeros<K>(f, 1, coind.dim);
            e(0, i) = FieldOps<K>::make(f, 1);
            if (!containsMinimal(e)) return false;
          }
          for (int t = 0; t < 16; ++t)
            if (!containsMinimal(randomRowVector<K>(f, coind.dim, rng))) return false;
        }
      }
    }
    return true;
  });

  runCheck(out, "cmp/induce-additive-on-direct-sums", [&](std::string&) {
    for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
      if (!g.regular[static_cast<std::size_t>(j)]) continue;
      const JClassData jd = jclassData(s, g, j);
      const MonomialRep rho = rightSchutzenberger(s, jd);
      const auto vs = irreducibles<K>(s, jd.group, f, cfg, rng);
      const GModule<K>& a = vs.front();
      const GModule<K>& b = vs.back();
      const SModule<K> indSum = induce<K>(directSum<K>(a, b), jd, rho, s);
      if (indSum.dim != induce<K>(a, jd, rho, s).dim + induce<K>(b, jd, rho, s).dim) return false;
    }
    return true;
  });

  const bool finiteField = f.kind == Field::Kind::Prime;
  ChopResult<K> oracle;
  if (finiteField) {
    runCheck(out, "chop/regular-module-accounting", [&](std::string& detail) {
      oracle = chop<K>(regularSModule<K>(s, f), cfg, rng);
      if (oracle.totalDim != s.n) {
        detail = "dimension accounting broke";
        return false;
      }
      return true;
    });

    runCheck(out, "cmp/counting-bijection", [&](std::string& detail) {
      std::size_t groupCount = 0;
      for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
        if (!g.regular[static_cast<std::size_t>(j)]) continue;
        const JClassData jd = jclassData(s, g, j);
        groupCount += irreducibles<K>(s, jd.group, f, cfg, rng).size();
      }
      const int chopCount = oracle.distinctSimpleCount();
      if (reports.size() != groupCount || static_cast<int>(reports.size()) != chopCount) {
        detail = "pipeline " + std::to_string(reports.size()) + ", groups " +
                 std::to_string(groupCount) + ", chop " + std::to_string(chopCount);
        return false;
      }
      return true;
    });

    runCheck(out, "cmp/oracle-factor-roundtrip", [&](std::string& detail) {
      for (const auto& factor : oracle.factors) {
        if (factor.nullAction) continue;
        const SModule<K> fm{factor.dim, f, factor.actions};
        const auto apex = apexOf<K>(fm, s, g);
        if (!apex) {
          detail = "composition factor without an apex";
          return false;
        }
        const JClassData jd = jclassData(s, g, *apex);
        const GModule<K> res = restrictionToGroupModule<K>(fm, s, jd);
        // exactly one pipeline simple should match (apex, restriction)
        int matches = 0;
        for (const auto& r : reports) {
          if (r.apex != *apex || r.simpleDim != fm.dim) continue;
          if (!homSpace<K>(r.simpleModule, fm).empty()) ++matches;
        }
        if (matches != 1) {
          detail = "factor with apex " + std::to_string(*apex) + " matched " +
                   std::to_string(matches) + " pipeline simples";
          return false;
        }
        if (res.dim < 1) {
          detail = "factor restriction at its apex vanishes";
          return false;
        }
      }
      return true;
    });
  } else {
    runCheck(out, "cmp/counting-bijection", [&](std::string& detail) {
      std::size_t groupCount = 0;
      for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
        if (!g.regular[static_cast<std::size_t>(j)]) continue;
        const JClassData jd = jclassData(s, g, j);
        groupCount += irreducibles<K>(s, jd.group, f, cfg, rng).size();
      }
      if (reports.size() != groupCount) {
        detail = "pipeline " + std::to_string(reports.size()) + " vs groups " +
                 std::to_string(groupCount);
        return false;
      }
      return true;
    });
  }

  runCheck(out, "cmp/exhaustive-simplicity-within-cap", [&](std::string&) {
    for (const auto& r : reports) {
      if (!withinExhaustiveCap(f, r.simpleDim, cfg.exhaustiveCapLog2)) continue;
      const auto v = isSimple<K>(Actions<K>(r.simpleModule.actions), r.simpleDim, f,
                                 SimplicityMode::Exhaustive, rng, cfg.randomVectorTries,
                                 cfg.exhaustiveCapLog2);
      if (v.verdict != Simplicity::Simple) return false;
      const auto sampled = isSimple<K>(Actions<K>(r.simpleModule.actions), r.simpleDim, f,
                                       SimplicityMode::Sampled, rng, cfg.randomVectorTries,
                                       cfg.exhaustiveCapLog2);
      if (sampled.verdict == Simplicity::NotSimple) return false;
    }
    return true;
  });

  runCheck(out, "cmp/transversal-independence", [&](std::string& detail) {
    for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
      if (!g.regular[static_cast<std::size_t>(j)]) continue;
      if (!transversalIndependenceCheck<K>(s, g, f, j, cfg, rng, &detail)) return false;
    }
    return true;
  });

  if (isBand(s)) {
    runCheck(out, "band/closed-form-matches-pipeline", [&](std::string& detail) {
      const auto formula = bandIrreducibles<K>(s, g, f);
      if (formula.size() != reports.size()) {
        detail = "count mismatch";
        return false;
      }
      for (const auto& [j, rep] : formula) {
        if (!isMultiplicative<K>(s, rep)) return false;
        if (apexOf<K>(rep, s, g) != std::optional<int>(j)) return false;
        bool matched = false;
        for (const auto& r : reports) {
          if (r.apex != j || r.simpleDim != 1) continue;
          // same kernel {s | phi(s) = 0}
          bool sameKernel = true;
          for (int x = 0; x < s.n && sameKernel; ++x)
            sameKernel = isZeroMat(rep.actions[static_cast<std::size_t>(x)]) ==
                         isZeroMat(r.simpleModule.actions[static_cast<std::size_t>(x)]);
          if (sameKernel) matched = true;
        }
        if (!matched) {
          detail = "no pipeline simple matches the formula at J-class " + std::to_string(j);
          return false;
        }
      }
      return true;
    });
  }

  if (isInDA(s, g)) {
    runCheck(out, "band/da-closed-form", [&](std::string&) {
      const auto formula = daIrreducibles<K>(s, g, f);
      std::size_t regularCount = 0;
      for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j)
        if (g.regular[static_cast<std::size_t>(j)]) ++regularCount;
      if (formula.size() != regularCount || formula.size() != reports.size()) return false;
      for (const auto& [j, rep] : formula) {
        if (!isMultiplicative<K>(s, rep)) return false;
        if (apexOf<K>(rep, s, g) != std::optional<int>(j)) return false;
      }
      return true;
    });
  }

  return out;
}

template <class K>
std::vector<CheckResult> runChecks(const Semigroup& s, const Field& f, const ChopConfig& cfg,
                                   std::uint64_t seed) {
  const GreenStructure g = greenStructure(s);
  std::vector<CheckResult> out = greenChecks(s, g);
  std::vector<CheckResult> fc = fieldChecks<K>(s, g, f, cfg, seed);
  out.insert(out.end(), fc.begin(), fc.end());
  return out;
}

}  // namespace semirep
