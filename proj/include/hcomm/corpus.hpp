#pragma once

#include <string>
#include <vector>

#include "hcomm/group.hpp"

namespace hcomm {

struct CorpusEntry {
  std::string spec;  // canonical spec text
  FiniteGroup group;
};

/// Canonical spec strings of the built-in verification corpus, in report order.
const std::vector<std::string>& corpus_specs();

/// Builds every corpus group. Groups are constructed once and shared.
const std::vector<CorpusEntry>& corpus();

/// Looks a corpus group up by canonical spec; throws Error(InvalidArgument).
const FiniteGroup& corpus_group(const std::string& spec);

}  // namespace hcomm
