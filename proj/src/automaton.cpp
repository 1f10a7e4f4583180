#include "burnside/automaton.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <utility>

#include "burnside/error.hpp"

namespace burnside {

  namespace {

    ////////////////////////////////////////////////////////////////////////
    // Parsing
    ////////////////////////////////////////////////////////////////////////

    struct Node {
      enum class Kind { letter, concat, star } kind;
      Letter                             letter = Letter::a;
      std::vector<std::unique_ptr<Node>> children;
    };

    using NodePtr = std::unique_ptr<Node>;

    NodePtr make_letter(Letter x) {
      auto n    = std::make_unique<Node>();
      n->kind   = Node::Kind::letter;
      n->letter = x;
      return n;
    }

    NodePtr make_concat() {
      auto n  = std::make_unique<Node>();
      n->kind = Node::Kind::concat;
      return n;
    }

    NodePtr clone(Node const& n) {
      auto out    = std::make_unique<Node>();
      out->kind   = n.kind;
      out->letter = n.letter;
      for (auto const& c : n.children) {
        out->children.push_back(clone(*c));
      }
      return out;
    }

    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      NodePtr parse() {
        auto root = sequence();
        if (_pos != _text.size()) {
          fail("unexpected ')'");
        }
        return root;
      }

     private:
      [[noreturn]] void fail(std::string const& why) const {
        throw Error(ErrorCode::bad_expression,
                    why + " at offset " + std::to_string(_pos) + " in \""
                        + std::string(_text) + "\"");
      }

      NodePtr sequence() {
        auto seq = make_concat();
        while (_pos < _text.size() && _text[_pos] != ')') {
          seq->children.push_back(item());
        }
        if (seq->children.empty()) {
          fail("empty expression");
        }
        return seq;
      }

      NodePtr item() {
        auto node = atom();
        while (_pos < _text.size()) {
          if (_text[_pos] == '*') {
            ++_pos;
            auto star  = std::make_unique<Node>();
            star->kind = Node::Kind::star;
            star->children.push_back(std::move(node));
            node = std::move(star);
          } else if (_text[_pos] == '^') {
            ++_pos;
            std::size_t n      = 0;
            std::size_t digits = 0;
            while (_pos < _text.size() && _text[_pos] >= '0'
                   && _text[_pos] <= '9') {
              n = 10 * n + static_cast<std::size_t>(_text[_pos] - '0');
              ++_pos;
              ++digits;
            }
            if (digits == 0) {
              fail("expected exponent");
            }
            auto power = make_concat();
            for (std::size_t i = 0; i < n; ++i) {
              power->children.push_back(clone(*node));
            }
            node = std::move(power);
          } else {
            break;
          }
        }
        return node;
      }

      NodePtr atom() {
        if (_pos >= _text.size()) {
          fail("unexpected end");
        }
        char const c = _text[_pos++];
        if (c == 'a') {
          return make_letter(Letter::a);
        }
        if (c == 'b') {
          return make_letter(Letter::b);
        }
        if (c == '(') {
          auto inner = sequence();
          if (_pos >= _text.size() || _text[_pos] != ')') {
            fail("expected ')'");
          }
          ++_pos;
          return inner;
        }
        --_pos;
        fail(std::string("unexpected '") + c + "'");
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    ////////////////////////////////////////////////////////////////////////
    // Thompson NFA
    ////////////////////////////////////////////////////////////////////////

    struct Nfa {
      struct State {
        std::array<std::vector<std::size_t>, 2> on;
        std::vector<std::size_t>                eps;
      };
      std::vector<State> states;
      std::size_t        start  = 0;
      std::size_t        accept = 0;

      std::size_t add() {
        states.emplace_back();
        return states.size() - 1;
      }
    };

    // Returns (entry, exit) of the fragment for `node`.
    std::pair<std::size_t, std::size_t> build(Nfa& nfa, Node const& node) {
      switch (node.kind) {
        case Node::Kind::letter: {
          auto const in  = nfa.add();
          auto const out = nfa.add();
          nfa.states[in].on[static_cast<std::size_t>(node.letter)].push_back(
              out);
          return {in, out};
        }
        case Node::Kind::concat: {
          auto const in  = nfa.add();
          auto       cur = in;
          for (auto const& child : node.children) {
            auto [cin, cout] = build(nfa, *child);
            nfa.states[cur].eps.push_back(cin);
            cur = cout;
          }
          return {in, cur};
        }
        case Node::Kind::star: {
          auto const in        = nfa.add();
          auto const out       = nfa.add();
          auto [cin, cout]     = build(nfa, *node.children.front());
          nfa.states[in].eps   = {cin, out};
          nfa.states[cout].eps = {cin, out};
          return {in, out};
        }
      }
      return {0, 0};
    }

    Nfa reversed(Nfa const& nfa) {
      Nfa out;
      out.states.resize(nfa.states.size());
      for (std::size_t s = 0; s < nfa.states.size(); ++s) {
        for (std::size_t x = 0; x < 2; ++x) {
          for (auto t : nfa.states[s].on[x]) {
            out.states[t].on[x].push_back(s);
          }
        }
        for (auto t : nfa.states[s].eps) {
          out.states[t].eps.push_back(s);
        }
      }
      out.start  = nfa.accept;
      out.accept = nfa.start;
      return out;
    }

    using StateSet = std::vector<bool>;

    void close(Nfa const& nfa, StateSet& set) {
      std::vector<std::size_t> stack;
      for (std::size_t s = 0; s < set.size(); ++s) {
        if (set[s]) {
          stack.push_back(s);
        }
      }
      while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        for (auto t : nfa.states[s].eps) {
          if (!set[t]) {
            set[t] = true;
            stack.push_back(t);
          }
        }
      }
    }

    Dfa determinize(Nfa const& nfa) {
      std::map<StateSet, Dfa::State>     index;
      std::vector<StateSet>              sets;
      std::vector<std::array<Dfa::State, 2>> delta;
      std::vector<bool>                  accepting;

      auto intern = [&](StateSet set) {
        auto it = index.find(set);
        if (it != index.end()) {
          return it->second;
        }
        auto const id = static_cast<Dfa::State>(sets.size());
        index.emplace(set, id);
        accepting.push_back(set[nfa.accept]);
        sets.push_back(std::move(set));
        delta.push_back({0, 0});
        return id;
      };

      StateSet init(nfa.states.size(), false);
      init[nfa.start] = true;
      close(nfa, init);
      auto const start = intern(std::move(init));

      for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t x = 0; x < 2; ++x) {
          StateSet next(nfa.states.size(), false);
          for (std::size_t s = 0; s < nfa.states.size(); ++s) {
            if (sets[i][s]) {
              for (auto t : nfa.states[s].on[x]) {
                next[t] = true;
              }
            }
          }
          close(nfa, next);
          auto const id = intern(std::move(next));
          delta[i][x]   = id;
        }
      }
      return Dfa(std::move(delta), std::move(accepting), start);
    }

  }  // namespace

  Dfa::Dfa(std::vector<std::array<State, 2>> delta,
           std::vector<bool>                 accepting,
           State                             start)
      : _delta(std::move(delta)),
        _accepting(std::move(accepting)),
        _live(_accepting),
        _start(start) {
    // Backward reachability from the accepting states.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < _delta.size(); ++s) {
        if (!_live[s] && (_live[_delta[s][0]] || _live[_delta[s][1]])) {
          _live[s] = true;
          changed  = true;
        }
      }
    }
  }

  Recognizer::Recognizer(std::string_view expression)
      : _expression(expression) {
    auto root = Parser(expression).parse();
    Nfa  nfa;
    auto [in, out] = build(nfa, *root);
    nfa.start      = in;
    nfa.accept     = out;
    _forward       = determinize(nfa);
    _backward      = determinize(reversed(nfa));
  }

  bool Recognizer::accepts(std::span<Letter const> w) const {
    auto s = _forward.start();
    for (Letter x : w) {
      s = _forward.next(s, x);
      if (_forward.dead(s)) {
        return false;
      }
    }
    return _forward.accepting(s);
  }

  std::optional<std::size_t>
  Recognizer::longest_prefix(std::span<Letter const> w) const {
    std::optional<std::size_t> best;
    auto                       s = _forward.start();
    if (_forward.accepting(s)) {
      best = 0;
    }
    for (std::size_t i = 0; i < w.size() && !_forward.dead(s); ++i) {
      s = _forward.next(s, w[i]);
      if (_forward.accepting(s)) {
        best = i + 1;
      }
    }
    return best;
  }

  std::optional<std::size_t>
  Recognizer::longest_suffix(std::span<Letter const> w) const {
    std::optional<std::size_t> best;
    auto                       s = _backward.start();
    if (_backward.accepting(s)) {
      best = 0;
    }
    for (std::size_t i = 0; i < w.size() && !_backward.dead(s); ++i) {
      s = _backward.next(s, w[w.size() - 1 - i]);
      if (_backward.accepting(s)) {
        best = i + 1;
      }
    }
    return best;
  }

  std::string negate_expression(std::string_view expression) {
    std::string out(expression);
    for (char& c : out) {
      if (c == 'a') {
        c = 'b';
      } else if (c == 'b') {
        c = 'a';
      }
    }
    return out;
  }

}  // namespace burnside
