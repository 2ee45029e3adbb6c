#include "tcell/semibim.hpp"

#include <algorithm>

#include "tcell/error.hpp"

namespace tcell {

Semibimodule validate_semibimodule(const FinMonoid* M, const FinMonoid* A,
                                   const std::vector<int>& act) {
  const size_t expect = static_cast<size_t>(M->size) * A->size * M->size;
  if (act.size() != expect) throw Error("format", "action table has wrong size");
  for (int v : act)
    if (v < 0 || v >= A->size) throw Error("out-of-range", "action value out of range");

  Semibimodule sb;
  sb.M = M;
  sb.A = A;
  sb.act = act;

  auto law = [](const std::string& id, nlohmann::ordered_json w) {
    w["law"] = id;
    return Error("semibim-law", "action law '" + id + "' fails", std::move(w));
  };
  const int zero = A->identity;
  const int one = M->identity;
  for (int u = 0; u < M->size; ++u)
    for (int v = 0; v < M->size; ++v) {
      if (sb.act_at(u, zero, v) != zero)
        throw law("act-zero", {{"u", u}, {"v", v}});
      for (int a2 = 0; a2 < A->size; ++a2)
        for (int a1 = 0; a1 < A->size; ++a1)
          if (A->op(sb.act_at(u, a2, v), sb.act_at(u, a1, v)) !=
              sb.act_at(u, A->op(a2, a1), v))
            throw law("act-add", {{"u", u}, {"v", v}, {"a'", a2}, {"a", a1}});
    }
  for (int u2 = 0; u2 < M->size; ++u2)
    for (int u1 = 0; u1 < M->size; ++u1)
      for (int v1 = 0; v1 < M->size; ++v1)
        for (int v2 = 0; v2 < M->size; ++v2)
          for (int a = 0; a < A->size; ++a)
            if (sb.act_at(u2, sb.act_at(u1, a, v1), v2) !=
                sb.act_at(M->op(u2, u1), a, M->op(v1, v2)))
              throw law("act-mu", {{"u'", u2}, {"u", u1}, {"v", v1}, {"v'", v2}, {"a", a}});
  for (int a = 0; a < A->size; ++a)
    if (sb.act_at(one, a, one) != a) throw law("act-unit", {{"a", a}});
  return sb;
}

Semibimodule semibim_from_json(const nlohmann::json& j, Registry& reg) {
  if (!j.is_object() || !j.contains("M") || !j.contains("A") || !j.contains("act"))
    throw Error("format", "semibimodule document needs M/A/act");
  const FinMonoid* M = reg.get(j.at("M").get<std::string>());
  const FinMonoid* A = reg.get(j.at("A").get<std::string>());
  std::vector<int> act(static_cast<size_t>(M->size) * A->size * M->size, -1);
  for (const auto& entry : j.at("act")) {
    auto v = entry.get<std::vector<int>>();
    if (v.size() != 4) throw Error("format", "act entries are [u,a,v,result]");
    if (v[0] < 0 || v[0] >= M->size || v[1] < 0 || v[1] >= A->size || v[2] < 0 ||
        v[2] >= M->size)
      throw Error("out-of-range", "act key out of range");
    act[(static_cast<size_t>(v[0]) * A->size + v[1]) * M->size + v[2]] = v[3];
  }
  for (int v : act)
    if (v < 0) throw Error("format", "act table is not total");
  return validate_semibimodule(M, A, act);
}

nlohmann::ordered_json semibim_to_json(const Semibimodule& sb) {
  nlohmann::ordered_json j;
  j["M"] = sb.M->name;
  j["A"] = sb.A->name;
  auto arr = nlohmann::ordered_json::array();
  for (int u = 0; u < sb.M->size; ++u)
    for (int a = 0; a < sb.A->size; ++a)
      for (int v = 0; v < sb.M->size; ++v)
        arr.push_back({u, a, v, sb.act_at(u, a, v)});
  j["act"] = std::move(arr);
  return j;
}

std::vector<OneObjectCell> EmbeddedStructure::cells() const {
  std::vector<OneObjectCell> out;
  out.reserve(static_cast<size_t>(sb_->M->size) * sb_->M->size * sb_->A->size);
  for (int f = 0; f < sb_->M->size; ++f)
    for (int a = 0; a < sb_->A->size; ++a)
      for (int g = 0; g < sb_->M->size; ++g) out.push_back({g, a, f});
  return out;
}

OneObjectCell EmbeddedStructure::zero(int f) const {
  return {f, sb_->A->identity, f};
}

OneObjectCell EmbeddedStructure::vcompose(const OneObjectCell& x2,
                                          const OneObjectCell& x1) const {
  if (x2.f != x1.g)
    throw Error("not-chained", "vertical composition needs dom(left) = cod(right)",
                {{"left", {x2.g, x2.a, x2.f}}, {"right", {x1.g, x1.a, x1.f}}});
  return {x2.g, sb_->A->op(x2.a, x1.a), x1.f};
}

OneObjectCell EmbeddedStructure::whisker(int u, const OneObjectCell& x, int v) const {
  const FinMonoid* M = sb_->M;
  return {M->op(M->op(u, x.g), v), sb_->act_at(u, x.a, v), M->op(M->op(u, x.f), v)};
}

OneObjectModel::OneObjectModel(const EmbeddedStructure& s) : s_(&s) {
  elements_.resize(s.monoid()->size);
  for (int i = 0; i < s.monoid()->size; ++i) elements_[i] = i;
}

nlohmann::ordered_json OneObjectModel::cell_json(const OneObjectCell& x) const {
  nlohmann::ordered_json j;
  j["src"] = s_->monoid()->name;
  j["tgt"] = s_->monoid()->name;
  j["dom"] = {x.f};
  j["t"] = {x.a};
  j["cod"] = {x.g};
  return j;
}

bool sb_natural_wrt(const Semibimodule& sb, const OneObjectCell& x, const OneObjectCell& y) {
  const int one = sb.M->identity;
  const int lhs = sb.A->op(sb.act_at(one, x.a, y.g), sb.act_at(x.f, y.a, one));
  const int rhs = sb.A->op(sb.act_at(x.g, y.a, one), sb.act_at(one, x.a, y.f));
  return lhs == rhs;
}

SplittingData canonical_splitting(const EmbeddedStructure& s) {
  SplittingData sd;
  sd.s = &s;
  const int one = s.monoid()->identity;
  const int zero = s.fiber()->identity;
  sd.zero_lo = [one, zero](int g) { return OneObjectCell{g, zero, one}; };
  sd.zero_hi = [one, zero](int f) { return OneObjectCell{one, zero, f}; };
  sd.q = [one](const OneObjectCell& x) { return OneObjectCell{one, x.a, one}; };
  return sd;
}

namespace {

nlohmann::ordered_json oc_json(const OneObjectCell& x) {
  return nlohmann::ordered_json{{"cod", x.g}, {"t", x.a}, {"dom", x.f}};
}

}  // namespace

RecoveryResult recover(const SplittingData& sd) {
  RecoveryResult res;
  const EmbeddedStructure& s = *sd.s;
  const FinMonoid* M = s.monoid();
  const int one = M->identity;
  const auto H = s.cells();

  std::vector<OneObjectCell> carrier;
  for (const auto& x : H)
    if (x.f == one && x.g == one) carrier.push_back(x);
  auto carrier_index = [&](const OneObjectCell& x) -> int {
    for (size_t i = 0; i < carrier.size(); ++i)
      if (carrier[i] == x) return static_cast<int>(i);
    return -1;
  };

  auto& sp = res.splitting;
  for (int g = 0; g < M->size; ++g) {
    ++sp.checks;
    OneObjectCell lo = sd.zero_lo(g);
    OneObjectCell hi = sd.zero_hi(g);
    if (lo.f != one || lo.g != g)
      sp.record({"split-endpoints", {{"g", g}}, oc_json(lo), nullptr});
    if (hi.g != one || hi.f != g)
      sp.record({"split-endpoints", {{"f", g}}, oc_json(hi), nullptr});
    OneObjectCell together = s.vcompose(lo, hi);
    if (together != s.zero(g))
      sp.record({"split-zero", {{"f", g}}, oc_json(together), oc_json(s.zero(g))});
    OneObjectCell qlo = sd.q(lo);
    if (qlo != s.zero(one))
      sp.record({"split-q-lo", {{"g", g}}, oc_json(qlo), oc_json(s.zero(one))});
    OneObjectCell qhi = sd.q(hi);
    if (qhi != s.zero(one))
      sp.record({"split-q-hi", {{"f", g}}, oc_json(qhi), oc_json(s.zero(one))});
  }
  for (const auto& a : carrier) {
    ++sp.checks;
    if (sd.q(a) != a) sp.record({"split-qk", {{"a", a.a}}, oc_json(sd.q(a)), oc_json(a)});
  }
  for (const auto& x : H) {
    ++sp.checks;
    OneObjectCell qx = sd.q(x);
    if (carrier_index(qx) < 0) {
      sp.record({"split-q-carrier", {{"x", oc_json(x)}}, oc_json(qx), nullptr});
      continue;
    }
    OneObjectCell back = s.vcompose(s.vcompose(sd.zero_lo(x.g), qx), sd.zero_hi(x.f));
    if (back != x) sp.record({"split-decompose", {{"x", oc_json(x)}}, oc_json(back), oc_json(x)});
  }
  for (const auto& x : H)
    for (const auto& y : H) {
      if (x.f != y.g) continue;
      ++sp.checks;
      OneObjectCell lhs = sd.q(s.vcompose(x, y));
      OneObjectCell rhs = s.vcompose(sd.q(x), sd.q(y));
      if (lhs != rhs)
        sp.record({"split-q-add", {{"x", oc_json(x)}, {"y", oc_json(y)}}, oc_json(lhs),
                   oc_json(rhs)});
    }

  res.zero_split_identity = true;
  for (int f = 0; f < M->size; ++f)
    if (s.vcompose(sd.zero_hi(f), sd.zero_lo(f)) != s.zero(one)) {
      res.zero_split_identity = false;
      break;
    }

  auto beta = [&](int g, const OneObjectCell& a, int f) {
    return s.vcompose(s.vcompose(sd.zero_lo(g), a), sd.zero_hi(f));
  };
  auto& bj = res.bijection;
  if (sp.ok()) {
    for (int g = 0; g < M->size; ++g)
      for (const auto& a : carrier)
        for (int f = 0; f < M->size; ++f) {
          ++bj.checks;
          OneObjectCell b = beta(g, a, f);
          if (b.g != g || sd.q(b) != a || b.f != f) {
            nlohmann::ordered_json w{{"g", g}, {"a", a.a}, {"f", f}};
            bj.record({"alpha-beta", std::move(w), oc_json(b), nullptr});
          }
        }
    for (const auto& x : H) {
      ++bj.checks;
      OneObjectCell back = beta(x.g, sd.q(x), x.f);
      if (back != x) bj.record({"beta-alpha", {{"x", oc_json(x)}}, oc_json(back), oc_json(x)});
    }
  }

  if (!sp.ok() || !bj.ok()) return res;

  // Build the recovered action and partial sum as carrier-index tables.
  GeneralizedSemibimodule gen;
  gen.M = M;
  gen.carrier = carrier;
  gen.zero_index = carrier_index(s.zero(one));
  const int nc = static_cast<int>(carrier.size());
  gen.mu.assign(static_cast<size_t>(M->size) * nc * M->size, -1);
  gen.rho.assign(static_cast<size_t>(nc) * M->size * nc, -1);
  auto& laws = res.laws;
  bool tables_ok = true;
  for (int u = 0; u < M->size; ++u)
    for (int a = 0; a < nc; ++a)
      for (int v = 0; v < M->size; ++v) {
        const int r = carrier_index(sd.q(s.whisker(u, carrier[a], v)));
        gen.mu[(static_cast<size_t>(u) * nc + a) * M->size + v] = r;
        if (r < 0) tables_ok = false;
      }
  for (int a1 = 0; a1 < nc; ++a1)
    for (int g = 0; g < M->size; ++g)
      for (int a2 = 0; a2 < nc; ++a2) {
        OneObjectCell cell = s.vcompose(
            s.vcompose(s.vcompose(carrier[a1], sd.zero_hi(g)), sd.zero_lo(g)), carrier[a2]);
        const int r = carrier_index(cell);
        gen.rho[(static_cast<size_t>(a1) * M->size + g) * nc + a2] = r;
        if (r < 0) {
          laws.record({"rho-escapes", {{"a1", a1}, {"g", g}, {"a2", a2}}, oc_json(cell),
                       nullptr});
          tables_ok = false;
        }
      }
  if (!tables_ok) return res;

  auto law = [&](const std::string& id, nlohmann::ordered_json w, int lhs, int rhs) {
    laws.record({id, std::move(w), nlohmann::ordered_json(lhs), nlohmann::ordered_json(rhs)});
  };
  for (int u = 0; u < M->size; ++u)
    for (int v = 0; v < M->size; ++v) {
      ++laws.checks;
      if (gen.mu_at(u, gen.zero_index, v) != gen.zero_index)
        law("gen-mu-zero", {{"u", u}, {"v", v}}, gen.mu_at(u, gen.zero_index, v),
            gen.zero_index);
      for (int g = 0; g < M->size; ++g)
        for (int a1 = 0; a1 < nc; ++a1)
          for (int a2 = 0; a2 < nc; ++a2) {
            ++laws.checks;
            const int lhs = gen.rho_at(gen.mu_at(u, a1, v), g, gen.mu_at(u, a2, v));
            const int rhs = gen.mu_at(u, gen.rho_at(a1, g, a2), v);
            if (lhs != rhs)
              law("gen-rho-equivariance",
                  {{"u", u}, {"v", v}, {"g", g}, {"a1", a1}, {"a2", a2}}, lhs, rhs);
          }
    }
  for (int u2 = 0; u2 < M->size; ++u2)
    for (int u1 = 0; u1 < M->size; ++u1)
      for (int v1 = 0; v1 < M->size; ++v1)
        for (int v2 = 0; v2 < M->size; ++v2)
          for (int a = 0; a < nc; ++a) {
            ++laws.checks;
            const int lhs = gen.mu_at(u2, gen.mu_at(u1, a, v1), v2);
            const int rhs = gen.mu_at(M->op(u2, u1), a, M->op(v1, v2));
            if (lhs != rhs)
              law("gen-mu-mu", {{"u'", u2}, {"u", u1}, {"v", v1}, {"v'", v2}, {"a", a}},
                  lhs, rhs);
          }
  for (int a = 0; a < nc; ++a) {
    ++laws.checks;
    if (gen.mu_at(one, a, one) != a)
      law("gen-mu-unit", {{"a", a}}, gen.mu_at(one, a, one), a);
  }
  for (int a = 0; a < nc; ++a)
    for (int f = 0; f < M->size; ++f) {
      ++laws.checks;
      if (gen.rho_at(a, f, gen.zero_index) != a)
        law("gen-rho-unit", {{"a", a}, {"f", f}, {"side", "right"}},
            gen.rho_at(a, f, gen.zero_index), a);
      if (gen.rho_at(gen.zero_index, f, a) != a)
        law("gen-rho-unit", {{"a", a}, {"f", f}, {"side", "left"}},
            gen.rho_at(gen.zero_index, f, a), a);
    }
  for (int a1 = 0; a1 < nc; ++a1)
    for (int f = 0; f < M->size; ++f)
      for (int a2 = 0; a2 < nc; ++a2)
        for (int g = 0; g < M->size; ++g)
          for (int a3 = 0; a3 < nc; ++a3) {
            ++laws.checks;
            const int lhs = gen.rho_at(a1, f, gen.rho_at(a2, g, a3));
            const int rhs = gen.rho_at(gen.rho_at(a1, f, a2), g, a3);
            if (lhs != rhs)
              law("gen-rho-assoc",
                  {{"a1", a1}, {"f", f}, {"a2", a2}, {"g", g}, {"a3", a3}}, lhs, rhs);
          }

  if (laws.ok()) res.value = std::move(gen);
  return res;
}

nlohmann::ordered_json recovery_to_json(const RecoveryResult& r) {
  nlohmann::ordered_json j;
  j["ok"] = r.ok();
  j["zero_split_identity"] = r.zero_split_identity;
  j["splitting"] = r.splitting.to_json();
  j["bijection"] = r.bijection.to_json();
  j["laws"] = r.laws.to_json();
  if (r.value) {
    const auto& g = *r.value;
    auto mu = nlohmann::ordered_json::array();
    for (int u = 0; u < g.M->size; ++u)
      for (int a = 0; a < static_cast<int>(g.carrier.size()); ++a)
        for (int v = 0; v < g.M->size; ++v) mu.push_back({u, a, v, g.mu_at(u, a, v)});
    auto rho = nlohmann::ordered_json::array();
    for (int a1 = 0; a1 < static_cast<int>(g.carrier.size()); ++a1)
      for (int gg = 0; gg < g.M->size; ++gg)
        for (int a2 = 0; a2 < static_cast<int>(g.carrier.size()); ++a2)
          rho.push_back({a1, gg, a2, g.rho_at(a1, gg, a2)});
    j["mu"] = std::move(mu);
    j["rho"] = std::move(rho);
    j["zero"] = g.zero_index;
  }
  return j;
}

}  // namespace tcell
