#pragma once

#include <string>

#include "lehel/chains.hpp"

namespace lehel {

const char* to_string(Claim claim);
Claim claim_from_string(const std::string& name);

/// Certificate JSON: params, items (kind, vseq, colour) and uncovered, plus a
/// "claim" field naming the guarantee the certificate is checked against.
std::string certificate_to_json(const Certificate& cert, int indent = 2);
/// Parses certificate JSON; a missing "claim" reads as none. Throws
/// InvalidArgument on malformed input.
Certificate certificate_from_json(const std::string& text);

/// Graphviz rendering: one cluster per item, consecutive cycle vertices
/// joined in traversal order, edges coloured by the cycle colour.
std::string certificate_to_dot(const Certificate& cert);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lehel
