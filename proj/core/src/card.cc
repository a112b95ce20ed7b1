#include "leadinf/card.h"

#include "leadinf/errors.h"

namespace leadinf {
namespace {

constexpr std::string_view kSuitChars = "CDHS";
constexpr std::string_view kRankChars = "23456789TJQKA";

}  // namespace

char SuitChar(Suit s) { return kSuitChars[SuitIndex(s)]; }
char RankChar(Rank r) { return kRankChars[RankIndex(r)]; }

std::optional<Suit> SuitFromChar(char c) {
  auto pos = kSuitChars.find(c);
  if (pos == std::string_view::npos) return std::nullopt;
  return static_cast<Suit>(pos);
}

std::optional<Rank> RankFromChar(char c) {
  auto pos = kRankChars.find(c);
  if (pos == std::string_view::npos) return std::nullopt;
  return static_cast<Rank>(pos);
}

Card Card::FromCode(std::string_view code) {
  if (code.size() != 2) {
    throw ParseError("card code must be 2 characters: '" + std::string(code) + "'");
  }
  auto suit = SuitFromChar(code[0]);
  if (!suit) throw ParseError("unknown suit in card code '" + std::string(code) + "'");
  auto rank = RankFromChar(code[1]);
  if (!rank) throw ParseError("unknown rank in card code '" + std::string(code) + "'");
  return Card(*suit, *rank);
}

std::string Card::Code() const { return {SuitChar(suit()), RankChar(rank())}; }

Strain StrainFromString(std::string_view text) {
  if (text == "NT" || text == "N") return Strain::kNoTrump;
  if (text.size() == 1) {
    if (auto s = SuitFromChar(text[0])) return static_cast<Strain>(*s);
  }
  throw ParseError("unknown strain '" + std::string(text) + "'");
}

std::string StrainToString(Strain strain) {
  if (strain == Strain::kNoTrump) return "NT";
  return std::string(1, SuitChar(static_cast<Suit>(strain)));
}

std::optional<Suit> TrumpSuit(Strain strain) {
  if (strain == Strain::kNoTrump) return std::nullopt;
  return static_cast<Suit>(strain);
}

}  // namespace leadinf
