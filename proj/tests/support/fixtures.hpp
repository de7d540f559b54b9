#ifndef LCOAL_TEST_FIXTURES_HPP
#define LCOAL_TEST_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "lcoal/lcoal.hpp"

#ifndef LCOAL_FIXTURE_DIR
#error "LCOAL_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace lcoal::testing
{

inline std::string fixture_path(const std::string &name)
{
  return std::string(LCOAL_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string &name)
{
  std::ifstream in(fixture_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline WeightedDigraph e4() { return parse_graph(read_fixture("e4.graph")); }
inline WeightedDigraph loop_graph() { return parse_graph("a -> a\n"); }
inline WeightedDigraph two_cycle() { return parse_graph("a -> b\nb -> a\n"); }

// Sum of unit vectors/tensors named by label, e.g. vec(b, {"a", "c", "h_a"}).
inline FreeVector vec(const Basis &b, std::initializer_list<std::pair<Scalar, const char *>> terms)
{
  TermBuffer<Index> out;
  for (const auto &[c, name] : terms)
    out.add(b.index_of(name), c);
  return out.finish();
}

inline FreeVector parse_vec(const Basis &b, const std::string &text)
{
  return resolve_vector(parse_formal_sum(text), b);
}

inline Tensor2 parse_t2(const Basis &b, const std::string &text)
{
  return resolve_tensor2(parse_formal_sum(text), b);
}

inline Tensor3 parse_t3(const Basis &b, const std::string &text)
{
  TermBuffer<Triple> out;
  for (const auto &t : parse_formal_sum(text))
    out.add(Triple{b.index_of(t.legs.at(0)), b.index_of(t.legs.at(1)), b.index_of(t.legs.at(2))},
            t.coefficient);
  return out.finish();
}

inline TensorN parse_tn(const Basis &b, const std::string &text)
{
  return resolve_tensorn(parse_formal_sum(text), b);
}

}  // namespace lcoal::testing

#endif  // LCOAL_TEST_FIXTURES_HPP
