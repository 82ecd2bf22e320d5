#ifndef SCHUR_RENDER_HPP
#define SCHUR_RENDER_HPP

#include <string>

#include "schur/verify.hpp"

namespace schur {

// Record-shaped text output, byte-stable for golden tests.
std::string render_schur_text(const SchurResult& result);
std::string render_schur_json(const SchurResult& result);

std::string render_matrix_text(const RelationMatrix& M);
std::string render_matrix_json(const RelationMatrix& M);

std::string render_tree_text(const CaseNode& root);
std::string render_tree_json(const CaseNode& root);

std::string render_verify_text(const VerifyReport& report);
std::string render_verify_json(const VerifyReport& report);

std::string render_consistency_text(const ConsistencyReport& report);
std::string render_consistency_json(const ConsistencyReport& report);

} // namespace schur

#endif
