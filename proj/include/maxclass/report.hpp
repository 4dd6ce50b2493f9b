#ifndef MAXCLASS_REPORT_HPP
#define MAXCLASS_REPORT_HPP

#include <string>

#include "maxclass/classify.hpp"
#include "maxclass/extend.hpp"

namespace maxclass {

// Line-delimited structured records with stable field names.  Identical
// inputs produce byte-identical output.

std::string render_outcome(const ExtensionOutcome& out, bool structured);
std::string render_chain(const ChainResult& chain, bool structured);
std::string render_branch(const BranchNode& node, bool structured,
                          const std::string& path = "0", int indent = 0);
std::string render_classify(const ClassifyResult& res, bool structured);
std::string render_main_theorem(const MainTheoremResult& res, bool structured);
std::string render_k_lemmas(const std::vector<KLemmaReport>& reps, bool structured);

}  // namespace maxclass

#endif
