#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "circletree/circle_graph.hpp"
#include "circletree/egraph.hpp"
#include "circletree/reduction.hpp"

namespace circletree {

// One entry of the form catalog. Pre-reduced forms are perfect matchings in
// which every edge is crossed and no three edges are pairwise parallel;
// reduced forms are the trees obtained from them by re-adding uncrossed
// bridges. Both catalogs are derived by enumeration, never hard-coded.
struct FormEntry {
  std::string id;      // "T2^4" or "T3^6[5]"
  int points = 0;
  EdgeList edges;      // canonical (lexicographically minimal rotation)
  int period = 0;
  std::string source;  // reduced forms: the pre-reduced form they come from
  std::string mirror;  // id of the reflect image
  int slots = 0;       // pre-reduced forms: count of admissible single uncrossed edges

  CanonicalForm canonical() const { return CanonicalForm{points, edges, period}; }
};

namespace detail {

inline void enumerate_perfect_matchings(int points, EdgeList& partial, std::vector<bool>& used,
                                        const std::function<void(const EdgeList&)>& emit) {
  int first = 1;
  while (first <= points && used[first]) ++first;
  if (first > points) {
    emit(partial);
    return;
  }
  used[first] = true;
  for (int second = first + 1; second <= points; ++second) {
    if (used[second]) continue;
    used[second] = true;
    partial.emplace_back(first, second);
    enumerate_perfect_matchings(points, partial, used, emit);
    partial.pop_back();
    used[second] = false;
  }
  used[first] = false;
}

// True iff every edge is crossed and every parallel class has at most two
// members, and the final offspring is Form 1 or Form 2.
inline bool is_prereduced_candidate(const CircleGraph& g) {
  const auto cs = cross_index_sets(g);
  for (const auto& s : cs)
    if (s.empty()) return false;
  for (const EdgeList& cls : parallel_classes(g))
    if (cls.size() > 2) return false;
  const auto kind = match_final_form(g).kind;
  return kind == FinalFormVerdict::Kind::Form1 || kind == FinalFormVerdict::Kind::Form2;
}

// Chords addable to a pre-reduced form one at a time: uncrossed in the result
// and not joining two parallel edges into a single e-graph.
inline EdgeList admissible_slots(const CircleGraph& form) {
  const int n = form.points();
  std::vector<EdgeList> pairs;
  for (const EdgeList& cls : parallel_classes(form))
    if (cls.size() == 2) pairs.push_back(cls);
  EdgeList out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      const Edge c{a, b};
      if (form.contains(c)) continue;
      bool ok = true;
      for (const Edge& f : form.edges())
        if (crosses(n, c, f)) {
          ok = false;
          break;
        }
      for (const EdgeList& pr : pairs)
        if (ok && c.shares_endpoint(pr[0]) && c.shares_endpoint(pr[1])) ok = false;
      if (ok) out.push_back(c);
    }
  return out;
}

struct GeneratedForm {
  CanonicalForm canon;
  int slots = 0;
};

inline std::vector<GeneratedForm> derive_prereduced_classes() {
  std::map<CanonicalForm, int> classes;  // canonical form -> slot count
  for (int m = 2; m <= 6; ++m) {
    const int points = 2 * m;
    EdgeList partial;
    std::vector<bool> used(points + 1, false);
    enumerate_perfect_matchings(points, partial, used, [&](const EdgeList& matching) {
      CircleGraph g(points, matching);
      if (!is_prereduced_candidate(g)) return;
      CanonicalForm canon = canonicalize(g);
      if (classes.count(canon)) return;
      classes.emplace(std::move(canon),
                      static_cast<int>(admissible_slots(to_circle_graph(canonicalize(g))).size()));
    });
  }
  std::vector<GeneratedForm> out;
  for (auto& [canon, slots] : classes) out.push_back({canon, slots});
  return out;
}

// All trees obtainable from the pre-reduced form by adding uncrossed chords
// on its own points such that e-reducing the tree returns the form; one
// canonical representative per rotation class.
inline std::vector<CanonicalForm> derive_reduced_from(const CircleGraph& form) {
  const int p = form.points();
  const int need = p - form.edge_count() - 1;
  EdgeList candidates;
  for (int a = 1; a <= p; ++a)
    for (int b = a + 1; b <= p; ++b) {
      const Edge c{a, b};
      if (form.contains(c)) continue;
      bool uncrossed = true;
      for (const Edge& f : form.edges())
        if (crosses(p, c, f)) {
          uncrossed = false;
          break;
        }
      if (uncrossed) candidates.push_back(c);
    }

  std::set<CanonicalForm> found;
  const int k = static_cast<int>(candidates.size());
  std::vector<int> pick;
  const std::function<void(int)> search = [&](int from) {
    if (static_cast<int>(pick.size()) == need) {
      EdgeList added;
      for (int i : pick) added.push_back(candidates[i]);
      for (std::size_t x = 0; x < added.size(); ++x)
        for (std::size_t y = x + 1; y < added.size(); ++y)
          if (crosses(p, added[x], added[y])) return;
      CircleGraph g = form.with(added);
      std::vector<int> parent(p + 1);
      for (int i = 1; i <= p; ++i) parent[i] = i;
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      int comps = p;
      for (const Edge& e : g.edges()) {
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) return;
        parent[ra] = rb;
        --comps;
      }
      if (comps != 1) return;
      CircleTree t(std::move(g));
      if (!is_genus_one(t.graph())) return;
      if (e_reduce(t).prereduced.edges() != form.edges()) return;
      found.insert(canonicalize(t.graph()));
      return;
    }
    for (int i = from; i < k; ++i) {
      pick.push_back(i);
      search(i + 1);
      pick.pop_back();
    }
  };
  if (need >= 0) search(0);
  return {found.begin(), found.end()};
}

}  // namespace detail

// Catalog of the pre-reduced and reduced forms, derived by enumeration and
// cross-validated against the expected structure. Construction throws
// CatalogError if the derivation does not come out exactly as required.
class Catalog {
 public:
  Catalog() { build(); }

  const std::vector<FormEntry>& prereduced() const { return prereduced_; }
  const std::vector<FormEntry>& reduced() const { return reduced_; }

  const FormEntry* find_reduced(const CanonicalForm& canon) const {
    auto it = reduced_index_.find(canon);
    return it == reduced_index_.end() ? nullptr : &reduced_[it->second];
  }
  const FormEntry* find(const std::string& id) const {
    for (const FormEntry& f : prereduced_)
      if (f.id == id) return &f;
    for (const FormEntry& f : reduced_)
      if (f.id == id) return &f;
    return nullptr;
  }

 private:
  void build();

  std::vector<FormEntry> prereduced_;
  std::vector<FormEntry> reduced_;
  std::map<CanonicalForm, std::size_t> reduced_index_;
};

inline void Catalog::build() {
  auto classes = detail::derive_prereduced_classes();
  if (classes.size() != 7)
    throw CatalogError("pre-reduced derivation produced " + std::to_string(classes.size()) +
                       " classes instead of 7");

  // Index order: 4 points first, then within each point count the 4-slot form
  // before the 6-slot one, then 10 and 12 points.
  std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
    if (x.canon.k != y.canon.k) return x.canon.k < y.canon.k;
    return x.slots < y.slots;
  });
  const int expected_points[7] = {4, 6, 6, 8, 8, 10, 12};
  const int order[7] = {0, 1, 3, 2, 4, 5, 6};  // position in `classes` of T2^1..T2^7
  for (int i = 0; i < 7; ++i)
    if (classes[i].canon.k != expected_points[i])
      throw CatalogError("pre-reduced point profile mismatch at position " + std::to_string(i));
  const int expected_slots[7] = {4, 4, 4, 6, 6, 6, 6};
  for (int i = 0; i < 7; ++i) {
    const auto& c = classes[order[i]];
    if (c.slots != expected_slots[i])
      throw CatalogError("slot count of T2^" + std::to_string(i + 1) + " is " +
                         std::to_string(c.slots) + ", expected " +
                         std::to_string(expected_slots[i]));
    FormEntry f;
    f.id = "T2^" + std::to_string(i + 1);
    f.points = c.canon.k;
    f.edges = c.canon.edges;
    f.period = c.canon.period;
    f.slots = c.slots;
    prereduced_.push_back(std::move(f));
  }

  const int expected_counts[7] = {1, 3, 1, 2, 6, 6, 0};
  std::map<CanonicalForm, std::size_t> index;
  for (int i = 0; i < 7; ++i) {
    const FormEntry& src = prereduced_[i];
    auto forms = detail::derive_reduced_from(to_circle_graph(src.canonical()));
    if (static_cast<int>(forms.size()) != expected_counts[i])
      throw CatalogError(src.id + " yielded " + std::to_string(forms.size()) +
                         " reduced forms, expected " + std::to_string(expected_counts[i]));

    std::vector<CanonicalForm> full, half;
    for (const CanonicalForm& c : forms) {
      if (c.period == c.k)
        full.push_back(c);
      else if (2 * c.period == c.k)
        half.push_back(c);
      else
        throw CatalogError("reduced form from " + src.id + " has period " +
                           std::to_string(c.period) + " on " + std::to_string(c.k) + " points");
    }
    const int expected_half = (i == 1) ? 2 : (i == 5) ? 3 : 0;
    if (static_cast<int>(half.size()) != expected_half)
      throw CatalogError(src.id + " yielded " + std::to_string(half.size()) +
                         " half-period reduced forms, expected " + std::to_string(expected_half));

    // Bracket labels: full-period forms in canonical order, then the
    // half-period block. Within the half-period block the self-mirror form
    // (when present) takes the middle label and each mirror pair is ordered
    // with its lexicographically smaller member first.
    std::vector<CanonicalForm> ordered = full;
    if (!half.empty()) {
      auto mirror_of = [](const CanonicalForm& c) {
        return canonicalize(reflect(to_circle_graph(c)));
      };
      std::optional<CanonicalForm> self;
      std::vector<CanonicalForm> paired;
      for (const CanonicalForm& c : half) {
        if (mirror_of(c) == c) {
          if (self) throw CatalogError(src.id + ": two self-mirror half-period forms");
          self = c;
        } else {
          paired.push_back(c);
        }
      }
      if (paired.size() % 2 != 0 || paired.size() > 2)
        throw CatalogError(src.id + ": half-period mirror pairing failed");
      std::sort(paired.begin(), paired.end());
      if (paired.size() == 2) {
        if (mirror_of(paired[0]) != paired[1])
          throw CatalogError(src.id + ": half-period forms do not pair under reflection");
        ordered.push_back(paired[0]);
        if (self) ordered.push_back(*self);
        ordered.push_back(paired[1]);
      } else if (self) {
        ordered.push_back(*self);
      }
    }

    for (std::size_t j = 0; j < ordered.size(); ++j) {
      FormEntry f;
      f.id = "T3^" + std::to_string(i + 1) + "[" + std::to_string(j + 1) + "]";
      f.points = ordered[j].k;
      f.edges = ordered[j].edges;
      f.period = ordered[j].period;
      f.source = src.id;
      if (index.count(ordered[j]))
        throw CatalogError("reduced form appears under two sources");
      index.emplace(ordered[j], reduced_.size());
      reduced_.push_back(std::move(f));
    }
  }
  if (reduced_.size() != 19)
    throw CatalogError("reduced catalog has " + std::to_string(reduced_.size()) +
                       " entries instead of 19");
  reduced_index_ = std::move(index);

  // Mirror pairing over both catalogs; reflection must be a catalog involution.
  int half_period_forms = 0;
  int self_mirror_half = 0;
  for (FormEntry& f : reduced_) {
    const CanonicalForm m = canonicalize(reflect(to_circle_graph(f.canonical())));
    const FormEntry* img = find_reduced(m);
    if (!img) throw CatalogError("reflection of " + f.id + " is not a reduced form");
    f.mirror = img->id;
    if (2 * f.period == f.points) {
      ++half_period_forms;
      if (img->id == f.id) ++self_mirror_half;
    }
  }
  if (half_period_forms != 5 || self_mirror_half != 1)
    throw CatalogError("expected exactly 5 half-period reduced forms with one reflect-fixed");
  for (const FormEntry& f : reduced_)
    if (find(f.mirror)->mirror != f.id)
      throw CatalogError("reflection is not an involution on the reduced catalog");
  for (FormEntry& f : prereduced_) {
    const CanonicalForm m = canonicalize(reflect(to_circle_graph(f.canonical())));
    const FormEntry* img = nullptr;
    for (const FormEntry& g : prereduced_)
      if (g.canonical() == m) img = &g;
    if (!img) throw CatalogError("reflection of " + f.id + " is not a pre-reduced form");
    f.mirror = img->id;
  }
}

inline const Catalog& catalog() {
  static const Catalog instance;
  return instance;
}

inline std::vector<FormEntry> generate_prereduced_forms() { return Catalog().prereduced(); }
inline std::vector<FormEntry> generate_reduced_catalog() { return Catalog().reduced(); }

// Catalog id of the reduced form of a genus-one tree.
inline std::string classify_tree(const CircleTree& tree) {
  const CanonicalForm canon = canonicalize(e_reduce(tree).reduced);
  const FormEntry* f = catalog().find_reduced(canon);
  if (!f)
    throw InvariantError("reduced form of the tree is not in the 19-form catalog");
  return f->id;
}

inline const FormEntry& form_metadata(const std::string& id) {
  const FormEntry* f = catalog().find(id);
  if (!f) throw DomainError("unknown form id: " + id);
  return *f;
}

}  // namespace circletree
