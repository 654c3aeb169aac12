#include "hcomm/corpus.hpp"

#include "hcomm/error.hpp"
#include "hcomm/group_spec.hpp"

namespace hcomm {

const std::vector<std::string>& corpus_specs() {
  static const std::vector<std::string> specs = [] {
    std::vector<std::string> out;
    for (int n = 2; n <= 12; ++n) out.push_back("cyclic(" + std::to_string(n) + ")");
    out.insert(out.end(), {"abelian([2,2])", "abelian([2,4])", "abelian([3,3])"});
    for (int n = 3; n <= 8; ++n) out.push_back("dihedral(" + std::to_string(n) + ")");
    out.insert(out.end(), {
                              "symmetric(3)",
                              "symmetric(4)",
                              "quaternion8",
                              "heisenberg(3)",
                              "product(symmetric(3), cyclic(2))",
                              "product(quaternion8, cyclic(3))",
                              "product(dihedral(4), cyclic(2))",
                              "semidirect(cyclic(7); cyclic(3); [[2]])",
                              "semidirect(cyclic(5); cyclic(4); [[2]])",
                              "semidirect(abelian([3,3]); cyclic(2); inversion)",
                              "semidirect(cyclic(9); cyclic(2); inversion)",
                              "semidirect(cyclic(3); cyclic(4); [[2]])",
                          });
    for (auto& s : out) s = to_string(parse_spec(s));
    return out;
  }();
  return specs;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (const auto& s : corpus_specs()) out.push_back({s, make_group(s)});
    return out;
  }();
  return entries;
}

const FiniteGroup& corpus_group(const std::string& spec) {
  const std::string canonical = to_string(parse_spec(spec));
  for (const auto& e : corpus()) {
    if (e.spec == canonical) return e.group;
  }
  fail(ErrorCode::InvalidArgument, spec + " is not in the corpus");
}

}  // namespace hcomm
