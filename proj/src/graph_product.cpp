#include "qlo/graph_product.hpp"

#include <algorithm>
#include <cctype>

namespace qlo {

  void Graph::add_edge(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) {
      throw Error("graph edge names a missing vertex");
    }
    if (i == j) {
      throw Error("graph edges may not be loops");
    }
    adj_[i * n_ + j] = true;
    adj_[j * n_ + i] = true;
  }

  std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (adjacent(i, j)) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        g.add_edge(i, j);
      }
    }
    return g;
  }

  GraphProduct::GraphProduct(std::string name, Graph graph,
                             std::vector<PresentationPtr> vertices)
      : name_(std::move(name)), graph_(std::move(graph)),
        vertices_(std::move(vertices)) {
    if (vertices_.empty() || vertices_.size() != graph_.size()) {
      throw Error("graph product needs one vertex group per vertex");
    }
    std::size_t offset = 0;
    for (auto const& v : vertices_) {
      if (!v) {
        throw Error("graph product vertex group missing");
      }
      letter_offset_.push_back(offset);
      offset += v->letters().size();
    }
    letter_offset_.push_back(offset);
  }

  // Merge with the nearest same-vertex syllable reachable through commuting
  // ones. Deleting it cannot make two older syllables mergeable: anything
  // between them commutes with the new vertex, the deleted one did not.
  void GraphProduct::insert(std::vector<Syllable>& word, Syllable s) const {
    auto const& G = *vertices_[s.vertex];
    if (s.g == G.identity()) {
      return;
    }
    for (std::size_t j = word.size(); j-- > 0;) {
      if (word[j].vertex == s.vertex) {
        Element g = G.mul(word[j].g, s.g);
        if (g == G.identity()) {
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
        } else {
          word[j].g = std::move(g);
        }
        return;
      }
      if (!graph_.adjacent(word[j].vertex, s.vertex)) {
        break;
      }
    }
    word.push_back(std::move(s));
  }

  void GraphProduct::sort_foata(std::vector<Syllable>& word) const {
    std::vector<Syllable> out;
    out.reserve(word.size());
    while (!word.empty()) {
      std::size_t best = word.size();
      for (std::size_t i = 0; i < word.size(); ++i) {
        bool initial = true;
        for (std::size_t j = 0; j < i && initial; ++j) {
          initial = graph_.adjacent(word[j].vertex, word[i].vertex);
        }
        if (initial && (best == word.size() || word[i].vertex < word[best].vertex)) {
          best = i;
        }
      }
      out.push_back(std::move(word[best]));
      word.erase(word.begin() + static_cast<std::ptrdiff_t>(best));
    }
    word = std::move(out);
  }

  GpElement GraphProduct::canon(std::vector<Syllable> const& raw) const {
    std::vector<Syllable> word;
    for (auto const& s : raw) {
      if (s.vertex >= vertices_.size()) {
        throw Error("syllable names a missing vertex");
      }
      insert(word, s);
    }
    sort_foata(word);
    return GpElement{std::move(word)};
  }

  GpElement GraphProduct::mul(GpElement const& x, GpElement const& y) const {
    std::vector<Syllable> word = x.syllables;
    for (auto const& s : y.syllables) {
      insert(word, s);
    }
    sort_foata(word);
    return GpElement{std::move(word)};
  }

  GpElement GraphProduct::inv(GpElement const& x) const {
    std::vector<Syllable> word;
    for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it) {
      word.push_back({it->vertex, vertices_[it->vertex]->inv(it->g)});
    }
    sort_foata(word);
    return GpElement{std::move(word)};
  }

  GpElement GraphProduct::syllable(std::size_t vertex, Element g) const {
    return canon({Syllable{vertex, std::move(g)}});
  }

  bool GraphProduct::is_positive(GpElement const& x) const {
    return std::all_of(x.syllables.begin(), x.syllables.end(),
                       [&](Syllable const& s) {
                         return vertices_[s.vertex]->is_positive(s.g);
                       });
  }

  InitialData GraphProduct::initial_split(GpElement const& x,
                                          std::size_t     vertex) const {
    auto const& s = x.syllables;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].vertex == vertex) {
        GpElement rest = x;
        rest.syllables.erase(rest.syllables.begin() + static_cast<std::ptrdiff_t>(i));
        sort_foata(rest.syllables);
        return {s[i].g, std::move(rest)};
      }
      if (!graph_.adjacent(s[i].vertex, vertex)) {
        break;
      }
    }
    return {vertices_.at(vertex)->identity(), x};
  }

  std::set<std::size_t> GraphProduct::vertex_set(GpElement const& x) const {
    std::set<std::size_t> out;
    for (auto const& s : x.syllables) {
      out.insert(s.vertex);
    }
    return out;
  }

  bool GraphProduct::leq_recursive(GpElement const& x, GpElement const& y) const {
    if (!is_positive(x) || !is_positive(y)) {
      throw Error("leq_recursive needs positive elements");
    }
    if (x.syllables.empty()) {
      return true;
    }
    std::size_t const I  = x.syllables.front().vertex;
    auto const&       G  = *vertices_[I];
    auto              xs = initial_split(x, I);
    auto              ys = initial_split(y, I);
    if (!G.leq(xs.head, ys.head)) {
      return false;
    }
    if (xs.head == ys.head) {
      return leq_recursive(xs.rest, ys.rest);
    }
    for (auto v : vertex_set(xs.rest)) {
      if (!graph_.adjacent(v, I)) {
        return false;
      }
    }
    GpElement z = mul(syllable(I, G.mul(G.inv(xs.head), ys.head)), ys.rest);
    return leq_recursive(xs.rest, z);
  }

  BasicJoin<GpElement> GraphProduct::join(GpElement const& x, GpElement const& y,
                                          std::vector<JoinLayer>* trace) const {
    using J = BasicJoin<GpElement>;
    if (!is_positive(x) || !is_positive(y)) {
      throw Error("graph product join needs positive elements");
    }
    if (x.syllables.empty()) {
      return J::finite(y);
    }
    if (y.syllables.empty()) {
      return J::finite(x);
    }
    std::size_t const I  = x.syllables.front().vertex;
    auto const&       G  = *vertices_[I];
    auto              xs = initial_split(x, I);
    auto              ys = initial_split(y, I);
    JoinResult        jI = G.join(xs.head, ys.head);
    if (!jI.is_finite()) {
      return jI.is_infinite() ? J::infinite() : J::inconclusive(jI.radius());
    }
    auto rest = join(xs.rest, ys.rest, trace);
    if (!rest.is_finite()) {
      return rest;
    }
    if (trace) {
      JoinLayer layer;
      layer.joined   = vertex_set(rest.value());
      layer.operands = vertex_set(xs.rest);
      auto ys_v      = vertex_set(ys.rest);
      layer.operands.insert(ys_v.begin(), ys_v.end());
      trace->push_back(std::move(layer));
    }
    GpElement cand = mul(syllable(I, jI.value()), rest.value());
    // Least whenever an upper bound exists; otherwise it fails to be one.
    if (is_positive(mul(inv(x), cand)) && is_positive(mul(inv(y), cand))) {
      return J::finite(std::move(cand));
    }
    return J::infinite();
  }

  GpElement GraphProduct::phi(GpElement const& x,
                              GraphProduct const& direct_sum) const {
    return direct_sum.canon(x.syllables);
  }

  Element GraphProduct::encode(GpElement const& x) const {
    std::vector<Element::value_type> code;
    for (auto const& s : x.syllables) {
      code.push_back(static_cast<Element::value_type>(s.vertex));
      code.push_back(static_cast<Element::value_type>(s.g.code().size()));
      code.insert(code.end(), s.g.code().begin(), s.g.code().end());
    }
    return Element(std::move(code));
  }

  GpElement GraphProduct::decode(Element const& x) const {
    auto      c = x.code();
    GpElement out;
    for (std::size_t i = 0; i < c.size();) {
      if (i + 2 > c.size()) {
        throw Error("malformed graph product encoding");
      }
      auto v   = static_cast<std::size_t>(c[i]);
      auto len = static_cast<std::size_t>(c[i + 1]);
      i += 2;
      if (v >= vertices_.size() || i + len > c.size()) {
        throw Error("malformed graph product encoding");
      }
      out.syllables.push_back(
          {v, Element(std::vector<Element::value_type>(c.begin() + i,
                                                       c.begin() + i + len))});
      i += len;
    }
    return out;
  }

  Element GraphProduct::mul(Element const& x, Element const& y) const {
    return encode(mul(decode(x), decode(y)));
  }

  Element GraphProduct::inv(Element const& x) const {
    return encode(inv(decode(x)));
  }

  bool GraphProduct::is_positive(Element const& x) const {
    return is_positive(decode(x));
  }

  JoinResult GraphProduct::join(Element const& x, Element const& y) const {
    return join(decode(x), decode(y)).map([this](GpElement const& j) {
      return encode(j);
    });
  }

  bool GraphProduct::join_is_exact() const {
    return std::all_of(vertices_.begin(), vertices_.end(),
                       [](PresentationPtr const& v) { return v->join_is_exact(); });
  }

  std::string GraphProduct::to_string(GpElement const& x) const {
    if (x.syllables.empty()) {
      return "e";
    }
    std::string s;
    for (auto const& syl : x.syllables) {
      if (!s.empty()) {
        s += ' ';
      }
      s += "[v" + std::to_string(syl.vertex) + ": "
           + vertices_[syl.vertex]->to_string(syl.g) + "]";
    }
    return s;
  }

  std::string GraphProduct::to_string(Element const& x) const {
    return to_string(decode(x));
  }

  Element GraphProduct::parse(std::string_view text) const {
    std::vector<Syllable> raw;
    std::size_t           i    = 0;
    auto                  skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    auto const first = text.find_first_not_of(" \t\n");
    auto const last  = text.find_last_not_of(" \t\n");
    if (first != std::string_view::npos && text.substr(first, last - first + 1) == "e") {
      return identity();
    }
    while (skip(), i < text.size()) {
      if (text[i] != '[' || i + 1 >= text.size() || text[i + 1] != 'v') {
        throw ParseError("expected a syllable like [v0: a^2]");
      }
      i += 2;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (start == i || i >= text.size() || text[i] != ':') {
        throw ParseError("expected a vertex index and ':'");
      }
      std::size_t v = std::stoul(std::string(text.substr(start, i - start)));
      if (v >= vertices_.size()) {
        throw ParseError("vertex v" + std::to_string(v) + " does not exist");
      }
      auto close = text.find(']', i);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated syllable");
      }
      raw.push_back({v, vertices_[v]->parse(text.substr(i + 1, close - i - 1))});
      i = close + 1;
    }
    return encode(canon(raw));
  }

  std::vector<std::string> GraphProduct::generator_names() const {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      for (auto const& n : vertices_[v]->generator_names()) {
        out.push_back("v" + std::to_string(v) + ":" + n);
      }
    }
    return out;
  }

  Element GraphProduct::generator(std::size_t i) const {
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (i < letter_offset_[v + 1]) {
        return encode(syllable(v, vertices_[v]->letters()[i - letter_offset_[v]]));
      }
    }
    throw Error("generator index out of range");
  }

  std::vector<Element> GraphProduct::letters() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < letter_offset_.back(); ++i) {
      out.push_back(generator(i));
    }
    return out;
  }

  std::optional<std::vector<std::size_t>> GraphProduct::positive_witness(
      Element const& x) const {
    std::vector<std::size_t> word;
    for (auto const& s : decode(x).syllables) {
      auto w = vertices_[s.vertex]->positive_witness(s.g);
      if (!w) {
        return std::nullopt;
      }
      for (auto i : *w) {
        word.push_back(letter_offset_[s.vertex] + i);
      }
    }
    return word;
  }

  GraphProduct direct_sum_of(GraphProduct const& gp) {
    return GraphProduct(gp.name() + "/sum", Graph::complete(gp.graph().size()),
                        gp.vertices());
  }

}  // namespace qlo
