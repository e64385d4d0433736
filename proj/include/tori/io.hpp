// File formats and token grammars shared by the CLI and its tests.
//
// Embedding files are JSON:
//
//   {"components": [{"voxels": [[x,y,z], ...],
//                    "marking": {"m": [[x,y,z], ...], "l": [[x,y,z], ...]},
//                    "box_margin": 2,
//                    "core": [[x,y,z], ...]}]}
//
// "box_margin" (default 2) and "core" (a closed lattice path down the middle
// of a tube component, used for oracle cross-checks) are optional; unknown
// keys are ignored.  Serialization emits two-space-indented JSON with keys in
// sorted order, so output is byte-stable.
//
// Move files are plain text: one token per line out of A, A_INV, B, ISO, ROT;
// blank lines and everything after '#' are ignored.
//
// Generator words are token lists: m2, l2, neg, refl, each optionally
// suffixed with ^-1; "swap" may appear as the leading token only, and "id"
// denotes the empty word.  The matrix of a word is the left-to-right product
// of its shear/sign tokens, right-multiplied by the swap matrix (0 1; 1 0)
// when the swap marker is present — so the swap acts first.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tori/cubical.hpp"
#include "tori/embedding.hpp"
#include "tori/mcg.hpp"
#include "tori/moves.hpp"

namespace tori::io {

struct ComponentFile {
  std::vector<cubical::Voxel> voxels;
  std::vector<cubical::Voxel> m;
  std::vector<cubical::Voxel> l;
  int box_margin = 2;
  // Empty means absent; a present core must be a closed lattice path.
  std::vector<cubical::Voxel> core;
};

struct EmbeddingFile {
  std::vector<ComponentFile> components;
};

// InputError on malformed JSON, missing keys, or out-of-range coordinates.
EmbeddingFile parse_embedding(const std::string& text);
std::string serialize_embedding(const EmbeddingFile& file);

// Build the fully validated system.  margin_override, when set, replaces
// every component's own box_margin.
embedding::SystemEmbedding to_system(const EmbeddingFile& file,
                                     std::optional<int> margin_override = {});

// InputError on an unknown token; returns the moves in file order.
std::vector<moves::Move> parse_moves(const std::string& text);
std::string serialize_moves(const moves::MoveSequence& seq);

struct ParsedWord {
  bool swap_first = false;
  std::vector<mcg::GenToken> word;
};

// UnknownGenerator on a bad token or a misplaced "swap".
ParsedWord parse_word(const std::vector<std::string>& tokens);
std::string word_to_string(const ParsedWord& parsed);  // "id" for the empty word
mcg::MappingClass compose_word(const ParsedWord& parsed);

// Four whitespace-separated integers "a b c d"; validated by make().
mcg::MappingClass parse_matrix(const std::string& text);

// Whole file as a string; InputError when unreadable.
std::string read_file(const std::string& path);

}  // namespace tori::io
