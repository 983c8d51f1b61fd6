#include "deckpoly/search.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <string>
#include <thread>

#include "deckpoly/deck.hpp"
#include "deckpoly/error.hpp"

namespace deckpoly {

namespace {

struct SignatureLess {
  bool operator()(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

struct Bucket {
  Polynomial poly;
  Digraph first;
  std::uint64_t count;
};

// Buckets within a signature keep first-seen order so merging contiguous
// rank ranges in order reproduces a single-threaded pass.
using GroupMap = std::map<std::vector<Polynomial>, std::vector<Bucket>, SignatureLess>;

void add_bucket(std::vector<Bucket>& buckets, Bucket bucket) {
  for (Bucket& b : buckets) {
    if (b.poly == bucket.poly) {
      b.count += bucket.count;
      return;
    }
  }
  buckets.push_back(std::move(bucket));
}

GroupMap scan_range(std::size_t n, std::size_t m, const PolyKind& kind, std::uint64_t first,
                    std::uint64_t last) {
  GroupMap groups;
  enumerate_digraphs(n, m, first, last, [&](const Digraph& g) {
    Deck d = deck(g, kind);
    add_bucket(groups[std::move(d.polys)], Bucket{poly_of(g, kind), g, 1});
    return true;
  });
  return groups;
}

}  // namespace

std::pair<Digraph, Digraph> canonical_counterexample(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "counterexample needs n >= 3; at n=2 the arc (0,n-1) repeats the path arc");
  }
  std::vector<Arc> path;
  for (std::size_t i = 0; i + 1 < n; ++i) path.push_back({i, i + 1});
  std::vector<Arc> g2 = path;
  g2.push_back({0, n - 1});
  return {directed_cycle(n), Digraph(n, std::move(g2))};
}

std::vector<CollisionGroup> find_deck_collisions(std::size_t n, std::size_t m,
                                                 const PolyKind& kind,
                                                 const SearchOptions& options) {
  if (n == 0 || m > n * (n - 1)) {
    throw Error(ErrorKind::kArcCountOutOfRange,
                "m=" + std::to_string(m) + " is not in [0, n(n-1)] for n=" + std::to_string(n));
  }
  const std::uint64_t total = count_digraphs(n, m);
  if (total > options.budget) {
    throw Error(ErrorKind::kBudgetExceeded, std::to_string(total) +
                                                " digraphs exceed the enumeration budget of " +
                                                std::to_string(options.budget));
  }
  if (m == 0) return {};

  unsigned workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, total));

  std::vector<GroupMap> partial(workers);
  if (workers == 1) {
    partial[0] = scan_range(n, m, kind, 0, total);
  } else {
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t first = total * w / workers;
      const std::uint64_t last = total * (w + 1) / workers;
      threads.emplace_back([&, w, first, last] {
        try {
          partial[w] = scan_range(n, m, kind, first, last);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  GroupMap merged = std::move(partial[0]);
  for (unsigned w = 1; w < workers; ++w) {
    for (auto& [signature, buckets] : partial[w]) {
      auto& target = merged[signature];
      for (auto& b : buckets) add_bucket(target, std::move(b));
    }
  }

  std::vector<CollisionGroup> out;
  for (auto& [signature, buckets] : merged) {
    if (buckets.size() < 2) continue;
    CollisionGroup group{kind, n, m, signature, {}};
    for (auto& b : buckets) {
      group.members.push_back(CollisionMember{std::move(b.first), std::move(b.poly), b.count});
    }
    std::sort(group.members.begin(), group.members.end(),
              [](const CollisionMember& a, const CollisionMember& b) { return a.poly < b.poly; });
    out.push_back(std::move(group));
  }
  return out;
}

bool recheck_group(const CollisionGroup& group) {
  std::vector<Polynomial> distinct;
  for (const CollisionMember& member : group.members) {
    if (member.graph.vertex_count() != group.vertex_count ||
        member.graph.arc_count() != group.arc_count) {
      return false;
    }
    if (deck(member.graph, group.kind).polys != group.deck_signature) return false;
    const Polynomial p = poly_of(member.graph, group.kind);
    if (p != member.poly) return false;
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  }
  return distinct.size() >= 2;
}

}  // namespace deckpoly
