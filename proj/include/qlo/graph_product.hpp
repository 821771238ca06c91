#ifndef QLO_GRAPH_PRODUCT_HPP_
#define QLO_GRAPH_PRODUCT_HPP_

// Graph products of ordered groups. Elements are reduced syllable sequences;
// among syllables that may be shuffled to the front, the smallest vertex
// index goes first, which makes the reduced form unique.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qlo/presentation.hpp"

namespace qlo {

  class Graph {
   public:
    explicit Graph(std::size_t n = 0) : n_(n), adj_(n * n, false) {}

    std::size_t size() const noexcept {
      return n_;
    }
    void add_edge(std::size_t i, std::size_t j);
    bool adjacent(std::size_t i, std::size_t j) const {
      return adj_[i * n_ + j];
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    static Graph complete(std::size_t n);

   private:
    std::size_t       n_;
    std::vector<bool> adj_;
  };

  struct Syllable {
    std::size_t vertex = 0;
    Element     g;

    friend bool operator==(Syllable const&, Syllable const&) = default;
  };

  struct GpElement {
    std::vector<Syllable> syllables;

    std::size_t length() const noexcept {
      return syllables.size();
    }
    friend bool operator==(GpElement const&, GpElement const&) = default;
  };

  // x = x_I x'. x_I is the identity of G_I when I is not initial on x.
  struct InitialData {
    Element   head;
    GpElement rest;
  };

  // One layer of the join recursion: the vertices of x' v y' and those of
  // x' and y'.
  struct JoinLayer {
    std::set<std::size_t> joined;
    std::set<std::size_t> operands;
  };

  class GraphProduct final : public Presentation {
   public:
    GraphProduct(std::string name, Graph graph,
                 std::vector<PresentationPtr> vertices);

    Graph const& graph() const noexcept {
      return graph_;
    }
    std::vector<PresentationPtr> const& vertices() const noexcept {
      return vertices_;
    }

    GpElement canon(std::vector<Syllable> const& raw) const;
    GpElement mul(GpElement const& x, GpElement const& y) const;
    GpElement inv(GpElement const& x) const;
    GpElement syllable(std::size_t vertex, Element g) const;

    bool                  is_positive(GpElement const& x) const;
    InitialData           initial_split(GpElement const& x, std::size_t vertex) const;
    std::set<std::size_t> vertex_set(GpElement const& x) const;

    // The recursion through initial syllables; leq() uses the cone.
    bool leq_recursive(GpElement const& x, GpElement const& y) const;
    BasicJoin<GpElement> join(GpElement const& x, GpElement const& y,
                              std::vector<JoinLayer>* trace = nullptr) const;

    // The componentwise product in the direct sum of the vertex groups,
    // modelled as the graph product over the complete graph.
    GpElement phi(GpElement const& x, GraphProduct const& direct_sum) const;

    Element   encode(GpElement const& x) const;
    GpElement decode(Element const& x) const;

    Family family() const noexcept override {
      return Family::graphprod;
    }
    std::string name() const override {
      return name_;
    }
    Element     identity() const override {
      return encode(GpElement{});
    }
    Element     mul(Element const& x, Element const& y) const override;
    Element     inv(Element const& x) const override;
    bool        is_positive(Element const& x) const override;
    JoinResult  join(Element const& x, Element const& y) const override;
    bool        join_is_exact() const override;
    std::string to_string(Element const& x) const override;
    std::string to_string(GpElement const& x) const;
    // "[v0: a^2] [v1: b]"; "e" is the identity.
    Element                  parse(std::string_view text) const override;
    std::vector<std::string> generator_names() const override;
    Element                  generator(std::size_t i) const override;
    std::vector<Element>     letters() const override;
    std::optional<std::vector<std::size_t>> positive_witness(
        Element const& x) const override;

   private:
    void insert(std::vector<Syllable>& word, Syllable s) const;
    void sort_foata(std::vector<Syllable>& word) const;

    std::string                  name_;
    Graph                        graph_;
    std::vector<PresentationPtr> vertices_;
    std::vector<std::size_t>     letter_offset_;
  };

  // The same vertex groups over the complete graph.
  GraphProduct direct_sum_of(GraphProduct const& gp);

}  // namespace qlo

#endif  // QLO_GRAPH_PRODUCT_HPP_
