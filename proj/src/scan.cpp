#include "semidet/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

namespace semidet {

  namespace {

    using Cell = std::int8_t;
    constexpr Cell undef = -1;

    struct Partial {
      std::size_t       n;
      std::vector<Cell> t;

      Cell get(std::size_t a, std::size_t b) const {
        return t[a * n + b];
      }
    };

    // Checks every triple that uses the product (a, b) and has all four of
    // its products defined.
    bool consistent(Partial const& P, std::size_t a, std::size_t b) {
      std::size_t const n = P.n;
      Cell const        c = P.get(a, b);
      for (std::size_t z = 0; z < n; ++z) {
        // (ab)z = a(bz)
        Cell l = P.get(c, z), bz = P.get(b, z);
        if (l != undef && bz != undef) {
          Cell r = P.get(a, bz);
          if (r != undef && l != r) {
            return false;
          }
        }
        // (za)b = z(ab)
        Cell za = P.get(z, a), r2 = P.get(z, c);
        if (za != undef && r2 != undef) {
          Cell l2 = P.get(za, b);
          if (l2 != undef && l2 != r2) {
            return false;
          }
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          // (xy)b = x(yb) with xy = a
          if (P.get(x, y) == static_cast<Cell>(a)) {
            Cell yb = P.get(y, b);
            if (yb != undef) {
              Cell r = P.get(x, yb);
              if (r != undef && r != c) {
                return false;
              }
            }
          }
          // (ax)y = a(xy) with xy = b
          if (P.get(x, y) == static_cast<Cell>(b)) {
            Cell ax = P.get(a, x);
            if (ax != undef) {
              Cell l = P.get(ax, y);
              if (l != undef && l != c) {
                return false;
              }
            }
          }
        }
      }
      return true;
    }

    Table to_table(Partial const& P) {
      Table out(P.n, std::vector<ElementId>(P.n));
      for (std::size_t a = 0; a < P.n; ++a) {
        for (std::size_t b = 0; b < P.n; ++b) {
          out[a][b] = static_cast<ElementId>(P.get(a, b));
        }
      }
      return out;
    }

    // Fills cells k, k+1, ... and calls visit on every complete table.
    template <typename Visit>
    void fill(Partial& P, std::size_t k, std::size_t stop, Visit&& visit) {
      if (k == stop) {
        visit(P);
        return;
      }
      std::size_t const a = k / P.n, b = k % P.n;
      for (std::size_t c = 0; c < P.n; ++c) {
        P.t[k] = static_cast<Cell>(c);
        if (consistent(P, a, b)) {
          fill(P, k + 1, stop, visit);
        }
      }
      P.t[k] = undef;
    }

    // Compares the relabeling of T by p (of its transpose when `tr`) with T.
    // Returns < 0 if the relabeling is smaller.
    int compare_relabeled(Table const&                    T,
                          std::vector<std::size_t> const& p,
                          std::vector<std::size_t> const& q,
                          bool                            tr) {
      std::size_t const n = T.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          ElementId src = tr ? T[q[j]][q[i]] : T[q[i]][q[j]];
          auto      u   = p[src];
          if (u != T[i][j]) {
            return u < T[i][j] ? -1 : 1;
          }
        }
      }
      return 0;
    }

    Table relabel(Table const& T, std::vector<std::size_t> const& p, bool tr) {
      std::size_t const n = T.size();
      Table             U(n, std::vector<ElementId>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          U[p[a]][p[b]] = static_cast<ElementId>(p[tr ? T[b][a] : T[a][b]]);
        }
      }
      return U;
    }

    std::vector<Partial> first_rows(std::size_t n) {
      std::vector<Partial> out;
      Partial              P{n, std::vector<Cell>(n * n, undef)};
      fill(P, 0, n, [&](Partial const& Q) { out.push_back(Q); });
      return out;
    }

    // Runs work(prefix, worker) over all first-row prefixes.
    template <typename Work>
    void parallel_over_prefixes(std::size_t n, std::size_t threads, Work&& work) {
      auto                     prefixes = first_rows(n);
      std::atomic<std::size_t> next{0};
      std::size_t const        nt = std::max<std::size_t>(
          1, std::min(threads == 0 ? scan_threads() : threads, prefixes.size()));
      auto run = [&](std::size_t worker) {
        for (std::size_t i; (i = next.fetch_add(1)) < prefixes.size();) {
          work(prefixes[i], worker);
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t w = 1; w < nt; ++w) {
        pool.emplace_back(run, w);
      }
      run(0);
      for (auto& th : pool) {
        th.join();
      }
    }

    std::size_t worker_count(std::size_t threads) {
      return std::max<std::size_t>(1, threads == 0 ? scan_threads() : threads);
    }

    void check_order(std::size_t n, std::size_t max_order) {
      if (n == 0 || n > max_order) {
        throw OrderCap(n, max_order);
      }
    }

  }  // namespace

  std::size_t scan_threads() {
    if (char const* env = std::getenv("SEMIDET_THREADS")) {
      char* end = nullptr;
      long  v   = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return static_cast<std::size_t>(v);
      }
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

  std::string encode(Table const& table) {
    std::string out;
    for (auto const& row : table) {
      for (ElementId x : row) {
        out += static_cast<char>('0' + x);
      }
    }
    return out;
  }

  bool is_canonical(Table const& T, bool anti) {
    std::size_t const        n = T.size();
    std::vector<std::size_t> p(n), q(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      for (std::size_t i = 0; i < n; ++i) {
        q[p[i]] = i;
      }
      if (compare_relabeled(T, p, q, false) < 0
          || (anti && compare_relabeled(T, p, q, true) < 0)) {
        return false;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return true;
  }

  Table canonical_form(Table const& T, bool anti) {
    std::size_t const        n = T.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Table best = T;
    do {
      best = std::min(best, relabel(T, p, false));
      if (anti) {
        best = std::min(best, relabel(T, p, true));
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }

  std::vector<Table> enumerate_tables(std::size_t n,
                                      bool        up_to_iso,
                                      bool        anti,
                                      std::size_t threads,
                                      std::size_t max_order) {
    check_order(n, max_order);
    std::vector<std::vector<Table>> found(worker_count(threads));
    parallel_over_prefixes(n, threads, [&](Partial prefix, std::size_t w) {
      fill(prefix, n, n * n, [&](Partial const& P) {
        Table T = to_table(P);
        if (!up_to_iso || is_canonical(T, anti)) {
          found[w].push_back(std::move(T));
        }
      });
    });
    std::vector<Table> out;
    for (auto& f : found) {
      std::move(f.begin(), f.end(), std::back_inserter(out));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint64_t count_tables(std::size_t n,
                             bool        up_to_iso,
                             bool        anti,
                             std::size_t threads,
                             std::size_t max_order) {
    check_order(n, max_order);
    std::atomic<std::uint64_t> count{0};
    parallel_over_prefixes(n, threads, [&](Partial prefix, std::size_t) {
      std::uint64_t local = 0;
      fill(prefix, n, n * n, [&](Partial const& P) {
        if (!up_to_iso || is_canonical(to_table(P), anti)) {
          ++local;
        }
      });
      count += local;
    });
    return count;
  }

  FiniteSemigroup semigroup_from_table(Table const& table) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < table.size(); ++i) {
      names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                             : "e" + std::to_string(i));
    }
    return FiniteSemigroup::validate(table, std::move(names));
  }

  bool report_flag(ClassificationReport const& r, std::string const& flag) {
    if (flag == "singleton_rich") {
      return r.singleton_rich;
    }
    if (flag == "ll_transitive") {
      return r.ll_transitive;
    }
    if (flag == "unital") {
      return r.unital;
    }
    if (flag == "has_zero") {
      return r.has_zero;
    }
    if (flag == "smooth") {
      return r.smooth.value_or(false);
    }
    if (flag == "imposed_condition") {
      return r.imposed_condition.value_or(false);
    }
    if (flag == "verified") {
      return r.factorization && r.factorization->verified;
    }
    if (flag == "nonzero") {
      return r.nonzero;
    }
    throw Error("unknown filter '" + flag + "'");
  }

  ScanSummary scan(ScanTask const&                                task,
                   std::function<void(std::string const&)> const& sink) {
    for (auto const& f : task.filters) {
      report_flag(ClassificationReport{}, f);  // rejects unknown names early
    }
    auto tables = enumerate_tables(task.order, task.up_to_iso, task.anti,
                                   task.threads, task.max_order);

    std::size_t const        nt = std::min(worker_count(task.threads),
                                    std::max<std::size_t>(1, tables.size()));
    std::vector<std::string> lines(tables.size());
    std::vector<char>        keep(tables.size(), 0);
    std::vector<ScanSummary> partial(nt);
    std::atomic<std::size_t> next{0};

    auto run = [&](std::size_t w) {
      auto& sum = partial[w];
      for (std::size_t i; (i = next.fetch_add(1)) < tables.size();) {
        auto S = semigroup_from_table(tables[i]);
        auto r = classify(S, "T" + std::to_string(task.order) + "_"
                                 + encode(tables[i]),
                          task.max_dim);
        ++sum.tables;
        sum.singleton_rich += r.singleton_rich;
        sum.ll_transitive += r.ll_transitive;
        bool hyp = r.singleton_rich && r.ll_transitive && r.unital;
        bool ok  = r.smooth.value_or(false) && r.imposed_condition.value_or(false)
                  && r.factorization && r.factorization->verified;
        sum.hypotheses += hyp;
        sum.smooth += r.smooth.value_or(false);
        sum.imposed += r.imposed_condition.value_or(false);
        sum.verified += r.factorization && r.factorization->verified;
        sum.claim_failures += hyp && !ok;
        bool pass = std::all_of(task.filters.begin(), task.filters.end(),
                                [&](std::string const& f) {
                                  return report_flag(r, f);
                                });
        if (pass) {
          keep[i]  = 1;
          lines[i] = emit_report(r);
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < nt; ++w) {
      pool.emplace_back(run, w);
    }
    run(0);
    for (auto& th : pool) {
      th.join();
    }

    ScanSummary total;
    for (auto const& s : partial) {
      total.tables += s.tables;
      total.singleton_rich += s.singleton_rich;
      total.ll_transitive += s.ll_transitive;
      total.hypotheses += s.hypotheses;
      total.smooth += s.smooth;
      total.imposed += s.imposed;
      total.verified += s.verified;
      total.claim_failures += s.claim_failures;
    }
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (keep[i]) {
        sink(lines[i]);
        ++total.emitted;
      }
    }
    return total;
  }

}  // namespace semidet
