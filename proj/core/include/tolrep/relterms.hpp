// Terms over relation variables built from composition and intersection.
//
// Concrete syntax, loosest binding first:
//
//   term   := factor ('&' factor)*
//   factor := atom ('o' atom)*
//   atom   := identifier | '(' term ')'
//
// Both operators associate to the left. The Unicode signs U+2218 (ring
// operator) and U+2229 (intersection) are accepted for 'o' and '&'. An
// identifier is [A-Za-z_][A-Za-z0-9_]*; the bare word "o" is the
// composition operator and cannot name a variable.

#ifndef TOLREP_RELTERMS_HPP_
#define TOLREP_RELTERMS_HPP_

#include <cstddef>      // for size_t
#include <map>          // for map
#include <memory>       // for shared_ptr
#include <set>          // for set
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "algebra.hpp"
#include "binrel.hpp"

namespace tolrep {

  class RelTerm {
   public:
    enum class Kind { variable, compose, intersect };

    static RelTerm variable(std::string name);
    static RelTerm compose(RelTerm left, RelTerm right);
    static RelTerm intersect(RelTerm left, RelTerm right);

    Kind kind() const noexcept {
      return _kind;
    }
    // Only meaningful for variables.
    std::string const& name() const noexcept {
      return _name;
    }
    // Only meaningful for compose and intersect.
    RelTerm const& left() const noexcept {
      return *_left;
    }
    RelTerm const& right() const noexcept {
      return *_right;
    }

    // Number of AST nodes.
    std::size_t size() const noexcept;
    // Number of variable occurrences.
    std::size_t leaf_count() const noexcept;
    std::set<std::string> variables() const;

    bool operator==(RelTerm const& other) const;

   private:
    RelTerm(Kind k, std::string name, std::shared_ptr<RelTerm const> l,
            std::shared_ptr<RelTerm const> r);

    Kind                           _kind;
    std::string                    _name;
    std::shared_ptr<RelTerm const> _left;
    std::shared_ptr<RelTerm const> _right;
  };

  // Throws SyntaxError with the byte offset of the problem.
  RelTerm parse_term(std::string_view text);

  // Minimal parentheses; parse_term(to_string(t)) == t.
  std::string to_string(RelTerm const& t);

  struct TermEdge {
    std::size_t u;
    std::size_t v;
    std::string label;
  };

  // Two-terminal series-parallel graph of a term: a variable is one edge
  // from source to sink, composition glues the sink of the left graph to
  // the source of the right one, intersection glues sources together and
  // sinks together.
  struct TermGraph {
    std::size_t           vertex_count;
    std::vector<TermEdge> edges;
    std::size_t           source;
    std::size_t           sink;
  };

  TermGraph term_graph(RelTerm const& t);

  // No vertex of term_graph(t) is incident with two distinct edges that
  // carry the same label.
  bool is_regular(RelTerm const& t);

  using Environment = std::map<std::string, BinRel, std::less<>>;

  // Throws LookupError for unbound variables and DimensionError when the
  // bound relations differ in size.
  BinRel eval_term(RelTerm const& t, Environment const& env);

  // Replaces every bound relation r by r o r.
  Environment square_environment(Environment const& env);

  // eval(p) inside eval(q) after squaring every relation of env. Requires
  // every relation in env to be a tolerance of alg.
  bool check_identity_iv(Algebra const&     alg,
                         RelTerm const&     p,
                         RelTerm const&     q,
                         Environment const& env);

}  // namespace tolrep

#endif  // TOLREP_RELTERMS_HPP_
