#pragma once

#include <atomic>
#include <chrono>
#include <concepts>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "downset/canonical.hpp"
#include "downset/complex.hpp"
#include "downset/errors.hpp"

// Generic memoized evaluation of recursively defined functions on complexes.
// A valuation supplies the base cases, the move relation and the combine rule;
// the engine walks the game dag with an explicit stack, canonicalizes every
// non-terminal subproblem and stores its value once per canonical key.
//
// Storage rule: base-case positions are answered directly and never stored,
// so P(6,6) runs stay within the 16352 isomorphism classes that carry faces.

namespace downset {

template <typename V>
concept Valuation = requires(const Complex& a, typename V::value_type v,
                             typename V::accumulator acc, unsigned mask) {
  { V::id } -> std::convertible_to<std::string_view>;
  { V::base(a) } -> std::same_as<std::optional<typename V::value_type>>;
  { V::is_move(a, mask) } -> std::same_as<bool>;
  { V::child(a, mask) } -> std::same_as<Complex>;
  { acc.feed(v) };
  { acc.decisive() } -> std::same_as<bool>;
  { acc.finish() } -> std::same_as<typename V::value_type>;
};

struct EvalOptions {
  std::size_t memo_limit = static_cast<std::size_t>(-1);
  unsigned threads = 1;
};

template <typename Value>
class MemoTable {
 public:
  MemoTable() = default;

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] const std::string& valuation_tag() const { return tag_; }

  // Adopts the first valuation that touches the table; mixing is a bug.
  void bind_valuation(std::string_view id) {
    if (tag_.empty())
      tag_ = id;
    else if (tag_ != id)
      throw std::logic_error("memo table already bound to valuation '" + tag_ + "'");
  }

  [[nodiscard]] const Value* find(const CanonicalKey& k) const {
    if (slots_.empty()) return nullptr;
    std::size_t mask = slots_.size() - 1;
    for (std::size_t i = k.hash() & mask;; i = (i + 1) & mask) {
      const Slot& s = slots_[i];
      if (s.key.chi.none()) return nullptr;
      if (s.key == k) return &s.value;
    }
  }

  // Returns true when the key was new. Stored complexes always carry at
  // least two faces, so an all-zero chi marks a free slot.
  bool insert_if_absent(const CanonicalKey& k, Value v) {
    if (slots_.empty()) grow(1024);
    else if ((size_ + 1) * 10 > slots_.size() * 7) grow(slots_.size() * 2);
    std::size_t mask = slots_.size() - 1;
    for (std::size_t i = k.hash() & mask;; i = (i + 1) & mask) {
      Slot& s = slots_[i];
      if (s.key.chi.none()) {
        s.key = k;
        s.value = std::move(v);
        ++size_;
        return true;
      }
      if (s.key == k) return false;
    }
  }

  void clear() {
    slots_.clear();
    size_ = 0;
    tag_.clear();
  }

 private:
  struct Slot {
    CanonicalKey key;
    Value value{};
  };

  void grow(std::size_t n) {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(n, Slot{});
    for (Slot& s : old)
      if (!s.key.chi.none()) {
        std::size_t mask = slots_.size() - 1;
        std::size_t i = s.key.hash() & mask;
        while (!slots_[i].key.chi.none()) i = (i + 1) & mask;
        slots_[i] = std::move(s);
      }
  }

  std::vector<Slot> slots_;
  std::size_t size_ = 0;
  std::string tag_;
};

namespace detail {

template <Valuation V>
class Evaluator {
  using Value = typename V::value_type;

 public:
  Evaluator(MemoTable<Value>& memo, const EvalOptions& opt, bool short_circuit,
            std::mutex* memo_mu = nullptr, std::atomic<bool>* cancel = nullptr)
      : memo_(memo), opt_(opt), short_circuit_(short_circuit),
        memo_mu_(memo_mu), cancel_(cancel) {}

  RunStats stats;

  // Evaluates a canonical representative that missed the memo.
  Value run(const Complex& rep, const CanonicalKey& key) {
    struct Frame {
      Complex rep;
      CanonicalKey key;
      unsigned cursor = 0;
      typename V::accumulator acc{};
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{rep, key});
    std::optional<Value> pending;
    while (true) {
      if (cancel_ && cancel_->load(std::memory_order_relaxed))
        throw cancelled{};
      Frame& f = stack.back();
      if (pending) {
        f.acc.feed(std::move(*pending));
        pending.reset();
      }
      std::optional<Value> out;
      if (short_circuit_ && f.acc.decisive()) {
        out = f.acc.finish();
      } else {
        unsigned m = next_move(f.rep, f.cursor);
        if (m == Bits256::npos) {
          out = f.acc.finish();
        } else {
          f.cursor = m + 1;
          Complex child = V::child(f.rep, m);
          ++stats.positions_visited;
          if (auto b = V::base(child)) {
            pending = std::move(*b);
            continue;
          }
          Canonicalization c = canonicalize(child);
          if (const Value* hit = find(c.key)) {
            pending = *hit;
            continue;
          }
          stack.push_back(Frame{c.representative, c.key});
          continue;
        }
      }
      store(f.key, *out);
      stack.pop_back();
      if (stack.empty()) return *out;
      pending = std::move(*out);
    }
  }

  struct cancelled {};

  const Value* find(const CanonicalKey& k) {
    if (!memo_mu_) return memo_.find(k);
    std::lock_guard<std::mutex> lk(*memo_mu_);
    return memo_.find(k);
  }

  void store(const CanonicalKey& k, const Value& v) {
    if (!memo_mu_) {
      if (memo_.size() >= opt_.memo_limit)
        throw resource_limit_error("memo table entry limit reached", stats);
      if (memo_.insert_if_absent(k, v)) ++stats.positions_stored;
      return;
    }
    std::lock_guard<std::mutex> lk(*memo_mu_);
    if (memo_.size() >= opt_.memo_limit)
      throw resource_limit_error("memo table entry limit reached", stats);
    if (memo_.insert_if_absent(k, v)) ++stats.positions_stored;
  }

  static unsigned next_move(const Complex& a, unsigned from) {
    const Bits256& chi = a.mask_set();
    for (unsigned m = chi.next(from); m != Bits256::npos; m = chi.next(m + 1))
      if (V::is_move(a, m)) return m;
    return Bits256::npos;
  }

 private:
  MemoTable<Value>& memo_;
  const EvalOptions& opt_;
  bool short_circuit_;
  std::mutex* memo_mu_;
  std::atomic<bool>* cancel_;
};

// Parallel mode: the root's children are evaluated by a small worker pool
// over a mutex-guarded memo table. Values are combined in move order, so the
// result matches the sequential one; duplicated in-flight work is possible
// but each key is counted at most once.
template <Valuation V>
typename V::value_type evaluate_root_parallel(const Canonicalization& root,
                                              MemoTable<typename V::value_type>& memo,
                                              const EvalOptions& opt, bool short_circuit,
                                              RunStats& stats) {
  using Value = typename V::value_type;
  struct Child {
    unsigned move;
    Complex rep;       // canonical form when not a base case
    CanonicalKey key;
    std::optional<Value> value;
  };
  std::vector<Child> children;
  for (unsigned m = root.representative.mask_set().next(0); m != Bits256::npos;
       m = root.representative.mask_set().next(m + 1)) {
    if (!V::is_move(root.representative, m)) continue;
    Complex child = V::child(root.representative, m);
    ++stats.positions_visited;
    Child c{m, Complex(), CanonicalKey{}, std::nullopt};
    if (auto b = V::base(child)) {
      c.value = std::move(*b);
    } else {
      Canonicalization cc = canonicalize(child);
      c.rep = cc.representative;
      c.key = cc.key;
    }
    children.push_back(std::move(c));
  }

  std::mutex memo_mu;
  std::atomic<bool> cancel{false};
  std::atomic<std::size_t> next{0};
  std::mutex result_mu;
  std::exception_ptr failure;
  RunStats worker_stats;

  // A child value is decisive when feeding it alone would already settle the
  // parent; once one is found the remaining workers stand down.
  auto short_circuit_is_decisive = [&](const Value& v) {
    if (!short_circuit) return false;
    typename V::accumulator probe{};
    probe.feed(Value(v));
    return probe.decisive();
  };
  auto worker = [&] {
    Evaluator<V> ev(memo, opt, short_circuit, &memo_mu, &cancel);
    while (!cancel.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1);
      if (i >= children.size()) break;
      Child& c = children[i];
      bool skip;
      {
        std::lock_guard<std::mutex> lk(result_mu);
        skip = c.value.has_value();
      }
      if (skip) continue;
      try {
        Value v;
        bool hit = false;
        {
          std::lock_guard<std::mutex> lk(memo_mu);
          if (const Value* p = memo.find(c.key)) {
            v = *p;
            hit = true;
          }
        }
        if (!hit) v = ev.run(c.rep, c.key);
        std::lock_guard<std::mutex> lk(result_mu);
        c.value = v;
        if (short_circuit_is_decisive(v)) cancel.store(true);
      } catch (typename Evaluator<V>::cancelled&) {
        break;
      } catch (...) {
        std::lock_guard<std::mutex> lk(result_mu);
        if (!failure) failure = std::current_exception();
        cancel.store(true);
        break;
      }
    }
    std::lock_guard<std::mutex> lk(result_mu);
    worker_stats.positions_visited += ev.stats.positions_visited;
    worker_stats.positions_stored += ev.stats.positions_stored;
  };
  unsigned nthreads = static_cast<unsigned>(
      std::min<std::size_t>(opt.threads, children.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  stats.positions_visited += worker_stats.positions_visited;
  stats.positions_stored += worker_stats.positions_stored;
  if (failure) std::rethrow_exception(failure);

  typename V::accumulator acc{};
  for (Child& c : children) {
    if (!c.value) continue;  // only possible past a decisive child
    acc.feed(std::move(*c.value));
    if (short_circuit && acc.decisive()) break;
  }
  Value out = acc.finish();
  if (memo.size() >= opt.memo_limit)
    throw resource_limit_error("memo table entry limit reached", stats);
  if (memo.insert_if_absent(root.key, out)) ++stats.positions_stored;
  return out;
}

template <Valuation V>
std::pair<typename V::value_type, RunStats> evaluate_impl(const Complex& root,
                                                          MemoTable<typename V::value_type>& memo,
                                                          const EvalOptions& opt,
                                                          bool short_circuit) {
  auto t0 = std::chrono::steady_clock::now();
  memo.bind_valuation(V::id);
  RunStats stats;
  ++stats.positions_visited;
  auto done = [&](typename V::value_type v) {
    stats.elapsed = std::chrono::steady_clock::now() - t0;
    return std::pair<typename V::value_type, RunStats>(std::move(v), stats);
  };
  try {
    if (auto b = V::base(root)) return done(std::move(*b));
    Canonicalization c = canonicalize(root);
    if (const auto* hit = memo.find(c.key)) return done(*hit);
    if (opt.threads > 1) {
      return done(evaluate_root_parallel<V>(c, memo, opt, short_circuit, stats));
    }
    Evaluator<V> ev(memo, opt, short_circuit);
    ev.stats = stats;
    auto v = ev.run(c.representative, c.key);
    stats = ev.stats;
    return done(std::move(v));
  } catch (resource_limit_error& e) {
    e.partial.elapsed = std::chrono::steady_clock::now() - t0;
    throw;
  } catch (const std::bad_alloc&) {
    stats.elapsed = std::chrono::steady_clock::now() - t0;
    throw resource_limit_error("allocation failed while evaluating", stats);
  }
}

}  // namespace detail

// Full evaluation: every child of every expanded position is visited.
template <Valuation V>
std::pair<typename V::value_type, RunStats> evaluate(const Complex& root,
                                                     MemoTable<typename V::value_type>& memo,
                                                     const EvalOptions& opt = {}) {
  return detail::evaluate_impl<V>(root, memo, opt, false);
}

// Stops expanding a position as soon as its accumulator turns decisive.
// Stored values stay exact, so short-circuit and full runs share tables.
template <Valuation V>
std::pair<typename V::value_type, RunStats> evaluate_shortcircuit(
    const Complex& root, MemoTable<typename V::value_type>& memo,
    const EvalOptions& opt = {}) {
  static_assert(V::accumulator::supports_short_circuit,
                "valuation has no decisive values");
  return detail::evaluate_impl<V>(root, memo, opt, true);
}

}  // namespace downset
