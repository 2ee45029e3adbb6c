#include "tcell/enumerate.hpp"

#include <cstdlib>
#include <fstream>
#include <future>

#include "tcell/error.hpp"
#include "tcell/verify.hpp"

#ifndef TCELL_DEFAULT_FIXTURES
#define TCELL_DEFAULT_FIXTURES ""
#endif

namespace tcell {

namespace {

// Fast validity predicate for the exhaustive enumeration; emitted structures
// are rebuilt through validate_bla, so a disagreement between the two
// surfaces immediately.
bool quick_valid(int n, unsigned mask, const std::vector<int>& e) {
  auto bit = [&](int b1, int b2, int b3) {
    return (mask >> ((b1 * n + b2) * n + b3)) & 1u;
  };
  for (int b = 0; b < n; ++b)
    if (!bit(e[b], b, e[b])) return false;
  for (int b1 = 0; b1 < n; ++b1)
    for (int b2 = 0; b2 < n; ++b2)
      for (int b3 = 0; b3 < n; ++b3)
        if (bit(b1, b2, e[b2]) && bit(e[b2], b2, b3) && !bit(b1, b2, b3)) return false;
  return true;
}

std::vector<BlaStructure> enum_shard(const FinMonoid* B, unsigned mask_begin,
                                     unsigned mask_end) {
  const int n = B->size;
  const int bits = n * n * n;
  std::vector<BlaStructure> out;
  long long rejected = 0;

  std::vector<std::array<int, 3>> triples;
  std::vector<int> e(n);
  for (unsigned mask = mask_begin; mask < mask_end; ++mask) {
    triples.clear();
    for (int i = 0; i < bits; ++i)
      if ((mask >> i) & 1u) triples.push_back({i / (n * n), (i / n) % n, i % n});

    std::fill(e.begin(), e.end(), 0);
    while (true) {
      if (quick_valid(n, mask, e)) {
        // Every m-table on R, odometer over the triples.
        std::vector<int> mvals(triples.size(), 0);
        while (true) {
          std::vector<std::array<int, 4>> m_entries;
          m_entries.reserve(triples.size());
          for (size_t i = 0; i < triples.size(); ++i)
            m_entries.push_back({triples[i][0], triples[i][1], triples[i][2], mvals[i]});
          out.push_back(validate_bla(B, triples, m_entries, e));
          int pos = static_cast<int>(mvals.size()) - 1;
          while (pos >= 0 && mvals[pos] == n - 1) mvals[pos--] = 0;
          if (pos < 0) break;
          ++mvals[pos];
        }
      } else {
        // Sampled cross-check: every 100th rejection must also fail the
        // reference validator.
        if (++rejected % 100 == 0) {
          bool threw = false;
          try {
            std::vector<std::array<int, 4>> m_entries;
            for (const auto& t : triples) m_entries.push_back({t[0], t[1], t[2], 0});
            validate_bla(B, triples, m_entries, e);
          } catch (const Error&) {
            threw = true;
          }
          if (!threw)
            throw Error("invariant-broken", "enumeration predicate disagrees with validate_bla");
        }
      }
      int pos = n - 1;
      while (pos >= 0 && e[pos] == n - 1) e[pos--] = 0;
      if (pos < 0) break;
      ++e[pos];
    }
  }
  return out;
}

std::vector<BlaStructure> enum_restricted(const FinMonoid* B) {
  const int n = B->size;
  std::vector<BlaStructure> out;

  struct Formula {
    std::string name;
    std::function<int(int, int, int)> eval;
  };
  std::vector<Formula> ms = {
      {"proj1", [](int a, int, int) { return a; }},
      {"proj2", [](int, int b, int) { return b; }},
      {"proj3", [](int, int, int c) { return c; }},
      {"sum13", [B](int a, int, int c) { return B->op(a, c); }},
      {"sum123", [B](int a, int b, int c) { return B->op(B->op(a, b), c); }},
  };
  if (B->is_group)
    ms.push_back({"maltsev", [B](int a, int b, int c) { return B->op(B->op(a, B->inv(b)), c); }});

  // R ranges over {diagonal, full}; e over all self-maps.
  for (int shape = 0; shape < 2; ++shape) {
    std::vector<std::array<int, 3>> triples;
    if (shape == 0) {
      for (int b = 0; b < n; ++b) triples.push_back({b, b, b});
    } else {
      for (int b1 = 0; b1 < n; ++b1)
        for (int b2 = 0; b2 < n; ++b2)
          for (int b3 = 0; b3 < n; ++b3) triples.push_back({b1, b2, b3});
    }
    std::vector<int> e(n, 0);
    while (true) {
      for (const auto& formula : ms) {
        std::vector<std::array<int, 4>> m_entries;
        for (const auto& t : triples)
          m_entries.push_back({t[0], t[1], t[2], formula.eval(t[0], t[1], t[2])});
        try {
          out.push_back(validate_bla(B, triples, m_entries, e));
        } catch (const Error& err) {
          if (err.code() != "bla-cond1" && err.code() != "bla-cond2") throw;
        }
      }
      int pos = n - 1;
      while (pos >= 0 && e[pos] == n - 1) e[pos--] = 0;
      if (pos < 0) break;
      ++e[pos];
    }
  }
  return out;
}

}  // namespace

std::vector<BlaStructure> enum_bla(const FinMonoid* B, const EnumOptions& opts) {
  if (opts.restricted) return enum_restricted(B);
  if (B->size > 2)
    throw Error("too-large", "exhaustive enumeration is guarded to |B| <= 2",
                {{"size", B->size}});
  const int bits = B->size * B->size * B->size;
  const unsigned total = 1u << bits;
  const int shards = std::max(1, opts.shards);

  std::vector<std::future<std::vector<BlaStructure>>> futs;
  for (int sh = 0; sh < shards; ++sh) {
    const unsigned begin = static_cast<unsigned>((static_cast<uint64_t>(total) * sh) / shards);
    const unsigned end =
        static_cast<unsigned>((static_cast<uint64_t>(total) * (sh + 1)) / shards);
    futs.push_back(std::async(std::launch::async, enum_shard, B, begin, end));
  }
  std::vector<BlaStructure> out;
  for (auto& f : futs) {
    auto part = f.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<CensusRow> census(const CellStructure& s, const Context& ctx) {
  std::vector<CensusRow> rows;
  MonModel model(s, ctx);
  const size_t n = ctx.size();
  std::vector<std::vector<std::vector<Cell>>> cells(n, std::vector<std::vector<Cell>>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) cells[a][b] = s.cells(ctx.object(a), ctx.object(b));

  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      CensusRow row;
      row.A = ctx.object(a);
      row.B = ctx.object(b);
      row.cells = static_cast<long long>(cells[a][b].size());
      for (const Cell& x : cells[a][b]) {
        bool natural = true;
        for (size_t xo = 0; xo < n; ++xo)
          for (const Cell& y : cells[xo][a])
            if (!is_natural_wrt(model, x, y)) {
              natural = false;
              ++row.nat_fail_pairs;
            }
        if (natural) ++row.natural;
      }
      rows.push_back(row);
    }
  return rows;
}

nlohmann::ordered_json census_to_json(const std::vector<CensusRow>& rows) {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json e;
    e["A"] = r.A->name;
    e["B"] = r.B->name;
    e["cells"] = r.cells;
    e["natural"] = r.natural;
    e["nat_fail_pairs"] = r.nat_fail_pairs;
    arr.push_back(std::move(e));
  }
  j["pairs"] = std::move(arr);
  return j;
}

long long count_cells(const CellStructure& s, const FinMonoid* A, const FinMonoid* B) {
  return static_cast<long long>(s.cells(A, B).size());
}

nlohmann::json load_pinned_counts() {
  std::string path;
  if (const char* env = std::getenv("TCELL_FIXTURES")) path = env;
  if (path.empty()) path = TCELL_DEFAULT_FIXTURES;
  if (path.empty()) return nlohmann::json::object();
  std::ifstream in(path);
  if (!in) return nlohmann::json::object();
  nlohmann::json j;
  try {
    in >> j;
  } catch (...) {
    return nlohmann::json::object();
  }
  return j;
}

}  // namespace tcell
