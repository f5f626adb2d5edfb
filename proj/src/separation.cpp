#include "trisep/separation.hpp"

#include "trisep/recognize.hpp"
#include "trisep/simd/cutscan.hpp"

namespace trisep {

CSSeparator make_separator(const Trigraph& host) {
  CSSeparator f;
  f.n = host.n();
  f.host_fingerprint = host.fingerprint();
  return f;
}

CSSeparator flip(const CSSeparator& f, const Trigraph& new_host) {
  CSSeparator out = make_separator(new_host);
  out.cuts.reserve(f.cuts.size());
  VertexSet u = vuniverse(f.n);
  for (const Cut& c : f.cuts) out.cuts.push_back(Cut{u & ~c.clique_side});
  return out;
}

CSSeparator all_cuts(const Trigraph& host) {
  CSSeparator f = make_separator(host);
  if (host.n() > 30) throw CapExceededError("all_cuts: 2^n family too large");
  std::uint64_t total = std::uint64_t{1} << host.n();
  f.cuts.reserve(total);
  for (std::uint64_t m = 0; m < total; ++m) f.cuts.push_back(Cut{m});
  return f;
}

VerifyResult verify_cs_separator(const Trigraph& t, const CSSeparator& f,
                                 const VerifyOptions& opts) {
  if (opts.check_host &&
      (f.n != t.n() || (f.host_fingerprint != 0 && f.host_fingerprint != t.fingerprint())))
    throw PreconditionError("verify_cs_separator: separator host mismatch");

  std::vector<std::uint64_t> sides;
  sides.reserve(f.cuts.size());
  for (const Cut& c : f.cuts) sides.push_back(c.clique_side);

  auto cliques = all_cliques(t, opts.clique_cap);
  auto stables = all_stable_sets(t, opts.clique_cap);

  VerifyResult res;
  bool have_cex = false;
  auto better = [&](VertexSet k, VertexSet s) {
    int sz = vcount(k) + vcount(s);
    int cur = vcount(res.clique) + vcount(res.stable);
    if (!have_cex || sz < cur) return true;
    if (sz > cur) return false;
    if (k != res.clique) return k < res.clique;
    return s < res.stable;
  };
  for (VertexSet k : cliques) {
    for (VertexSet s : stables) {
      if (k & s) continue;
      if (simd::find_separating_cut(sides.data(), sides.size(), k, s) >= 0) continue;
      if (better(k, s)) {
        res.clique = k;
        res.stable = s;
        have_cex = true;
      }
    }
  }
  res.ok = !have_cex;
  return res;
}

CSSeparator extend_maximal_separator(const Trigraph& t, const CSSeparator& f) {
  auto cls = is_in_class_f(t);
  if (!cls.in_class)
    throw PreconditionError("extend_maximal_separator: host not in class: " + cls.violation);
  CSSeparator out = f;
  out.n = t.n();
  out.host_fingerprint = t.fingerprint();
  for (int x = 0; x < t.n(); ++x) {
    out.cuts.push_back(Cut{t.closed_adj(x)});
    out.cuts.push_back(Cut{t.adj(x)});
  }
  for (auto [x, y] : t.switchable_pairs()) {
    out.cuts.push_back(Cut{t.closed_adj(x) & t.closed_adj(y)});
    out.cuts.push_back(Cut{t.closed_adj(x) & t.adj(y)});
    out.cuts.push_back(Cut{t.adj(x) & t.closed_adj(y)});
    out.cuts.push_back(Cut{t.adj(x) & t.adj(y)});
  }
  return out;
}

}  // namespace trisep
