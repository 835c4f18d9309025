#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace prunerl {

using TokenId = int;

// Closed character/marker vocabulary for the arithmetic-chain task.
//
// Scaffold words are spelled out with letter tokens. Structural markers
// (<think>, <answer>, ...) and the two length-limit template fragments are
// single atomic tokens so that truncating a token sequence at any position
// can never split them, and so the full system prompt stays a handful of
// tokens instead of hundreds of characters.
class Vocab {
public:
  Vocab();

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string& token(TokenId id) const { return tokens_[static_cast<size_t>(id)]; }
  const std::vector<std::string>& tokens() const { return tokens_; }

  // Exact segmentation of `text` into vocab tokens. Longest-match with
  // backtracking: succeeds on every string that is a concatenation of vocab
  // tokens, even where greedy matching would dead-end. Throws InputError on
  // unencodable text. decode(encode(s)) == s whenever encode succeeds.
  std::vector<TokenId> encode(std::string_view text) const;

  std::string decode(const std::vector<TokenId>& ids) const;
  std::string decode(const TokenId* ids, size_t n) const;

  std::optional<TokenId> id_of(std::string_view token) const;

  // FNV-1a over the ordered token list; stored in checkpoints so a model is
  // never loaded against a different vocabulary.
  std::uint64_t hash() const { return hash_; }

  // Special token ids.
  TokenId pad;
  TokenId eos;
  TokenId think_open;
  TokenId think_close;
  TokenId answer_open;
  TokenId answer_close;
  TokenId space;
  TokenId newline;
  TokenId blank_line;  // "\n\n"
  TokenId digit(int d) const { return digit0_ + d; }
  TokenId final_answer_marker;  // "**Final Answer:**"
  TokenId sys_prefix;           // fixed system-prompt text up to the limit value
  TokenId sys_suffix;           // " tokens."

private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> id_map_;
  TokenId digit0_ = 0;
  std::uint64_t hash_ = 0;
  size_t max_token_len_ = 0;

  TokenId add_(const std::string& s);
};

}  // namespace prunerl
