// Line-oriented text format for an algebra together with named relations.
//
//   # comment (to end of line)
//   algebra NAME
//   size N
//   op NAME ARITY
//   <exactly N^ARITY integers, row-major, first argument most significant,
//    spread over any number of lines>
//   rel NAME
//   a b
//   a b
//   ...
//
// `algebra` and `size` come first, followed by any number of `op` and `rel`
// sections. Relation pairs run until the next keyword or end of file. The
// diagonal of every relation is implicit and always added.

#ifndef TOLREP_TOOLS_DOCUMENT_HPP_
#define TOLREP_TOOLS_DOCUMENT_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "tolrep/algebra.hpp"
#include "tolrep/binrel.hpp"
#include "tolrep/corpus.hpp"
#include "tolrep/errors.hpp"

namespace tolrep {

  class FormatError : public Error {
   public:
    FormatError(std::size_t line, std::string const& msg)
        : Error("line " + std::to_string(line) + ": " + msg), _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  struct Document {
    std::string                                  name;
    Algebra                                      algebra;
    std::vector<std::pair<std::string, BinRel>> relations;

    // nullptr if absent
    BinRel const* find(std::string_view rel) const noexcept;
    // Throws LookupError if absent.
    BinRel const& relation(std::string_view rel) const;

    bool operator==(Document const&) const = default;
  };

  Document    parse_document(std::string_view text);
  std::string print_document(Document const& doc);

  Document to_document(CorpusEntry const& entry);
  // print_document with a comment header naming the elements.
  std::string print_corpus_entry(CorpusEntry const& entry);

  // Appends a `rel NAME` section listing the off-diagonal pairs of r.
  void append_relation(std::string& out, std::string_view name, BinRel const& r);

}  // namespace tolrep

#endif  // TOLREP_TOOLS_DOCUMENT_HPP_
