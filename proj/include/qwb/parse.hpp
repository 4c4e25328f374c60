#ifndef QWB_PARSE_HPP
#define QWB_PARSE_HPP

#include <map>

#include "qwb/frames.hpp"
#include "qwb/vmod.hpp"

namespace qwb {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) +
                           ": " + msg),
        line(l), col(c) {}
};

/// Parsed contents of a workbench text file. Section kinds: [quantale],
/// [vcat], [vrel], [vmod], [lattice], [space]; each section starts with a
/// `name` line and may reference earlier sections (or the builtin quantales
/// boolean and chain(n)).
struct Document {
  std::map<std::string, QuantalePtr> quantales;
  std::map<std::string, VCat> vcats;
  std::map<std::string, VRel> vrels;
  std::map<std::string, VModule> vmods;
  std::map<std::string, MeetSemilattice> lattices;
  std::map<std::string, FiniteSpace> spaces;
  std::vector<std::pair<std::string, std::string>> order;  // (kind, name)
};

Document parse_text(const std::string& text);
Document parse_file(const std::string& path);

/// Builtin (boolean, chain(n)) or document-defined quantale.
QuantalePtr resolve_quantale(const Document& doc, const std::string& name);

/// Canonical text; parsing it back reproduces the document.
std::string dump_document(const Document& doc);

}  // namespace qwb

#endif
