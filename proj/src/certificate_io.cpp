#include "capcup/certificate_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "capcup/errors.hpp"

namespace capcup {

namespace {

void write_chain_line(std::ostream& out, const char* tag, const chain& c) {
  out << tag;
  for (int v : c.vs) out << " " << v;
  out << "\n";
}

void write_laced(std::ostream& out, const laced_cup& lc) {
  write_chain_line(out, "cup", lc.cup);
  write_chain_line(out, "left", lc.left);
  write_chain_line(out, "right", lc.right);
}

std::string next_line(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw domain_error("bad-certificate: unexpected end of input");
  return line;
}

chain parse_chain_line(const std::string& line, const char* tag, orient kind) {
  std::istringstream ls(line);
  std::string word;
  ls >> word;
  if (word != tag)
    throw domain_error("bad-certificate: expected '" + std::string(tag) +
                       "' line, got '" + line + "'");
  chain c{kind, {}};
  int v;
  while (ls >> v) c.vs.push_back(v);
  if (c.vs.empty())
    throw domain_error("bad-certificate: empty chain line '" + line + "'");
  return c;
}

laced_cup parse_laced(std::istream& in) {
  laced_cup lc;
  lc.cup = parse_chain_line(next_line(in), "cup", orient::cup);
  lc.left = parse_chain_line(next_line(in), "left", orient::cup);
  lc.right = parse_chain_line(next_line(in), "right", orient::cup);
  return lc;
}

}  // namespace

void write_certificate(std::ostream& out, const certificate& c) {
  out << "certificate " << kind_name(c.kind) << " " << c.n << " " << c.a << " "
      << c.b << "\n";
  switch (c.kind) {
    case certificate_kind::cap:
      write_chain_line(out, "cap", c.single);
      break;
    case certificate_kind::cup:
      write_chain_line(out, "cup", c.single);
      break;
    case certificate_kind::gon:
      out << "gon " << (c.gon.strong ? "strong" : "weak") << " " << c.a << " "
          << c.b << "\n";
      write_chain_line(out, "cap", c.gon.cap);
      write_chain_line(out, "cup", c.gon.cup);
      break;
    case certificate_kind::laced_pair:
      for (const laced_cup& lc : c.family) write_laced(out, lc);
      break;
    case certificate_kind::k_family:
      out << "family " << c.family.size() << "\n";
      for (const laced_cup& lc : c.family) write_laced(out, lc);
      break;
  }
  out << "end\n";
}

certificate read_certificate(std::istream& in) {
  std::string header = next_line(in);
  std::istringstream hs(header);
  std::string word, kind;
  certificate c;
  if (!(hs >> word >> kind >> c.n >> c.a >> c.b) || word != "certificate")
    throw domain_error(
        "bad-certificate: expected 'certificate <kind> <n> <a> <b>'");
  if (kind == "cap") {
    c.kind = certificate_kind::cap;
    c.single = parse_chain_line(next_line(in), "cap", orient::cap);
  } else if (kind == "cup") {
    c.kind = certificate_kind::cup;
    c.single = parse_chain_line(next_line(in), "cup", orient::cup);
  } else if (kind == "gon") {
    c.kind = certificate_kind::gon;
    std::istringstream gs(next_line(in));
    std::string gw, strength;
    int ga = 0, gb = 0;
    if (!(gs >> gw >> strength >> ga >> gb) || gw != "gon" ||
        (strength != "weak" && strength != "strong"))
      throw domain_error("bad-certificate: expected 'gon weak|strong a b'");
    if (ga != c.a || gb != c.b)
      throw domain_error("bad-certificate: gon sizes disagree with header");
    c.gon.strong = strength == "strong";
    c.gon.cap = parse_chain_line(next_line(in), "cap", orient::cap);
    c.gon.cup = parse_chain_line(next_line(in), "cup", orient::cup);
  } else if (kind == "laced-pair") {
    c.kind = certificate_kind::laced_pair;
    c.family.push_back(parse_laced(in));
    c.family.push_back(parse_laced(in));
  } else if (kind == "k-family") {
    c.kind = certificate_kind::k_family;
    std::istringstream fs(next_line(in));
    std::string fw;
    int count = 0;
    if (!(fs >> fw >> count) || fw != "family" || count < 1)
      throw domain_error("bad-certificate: expected 'family <k>'");
    for (int i = 0; i < count; ++i) c.family.push_back(parse_laced(in));
  } else {
    throw domain_error("bad-certificate: unknown kind '" + kind + "'");
  }
  if (next_line(in) != "end")
    throw domain_error("bad-certificate: missing 'end'");
  return c;
}

}  // namespace capcup
