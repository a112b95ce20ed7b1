#ifndef LEADINF_CARD_H_
#define LEADINF_CARD_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace leadinf {

inline constexpr int kNumSuits = 4;
inline constexpr int kNumRanks = 13;
inline constexpr int kNumCards = kNumSuits * kNumRanks;

// Enumerator values follow the bridge ranking, so comparing suits compares
// their rank: S > H > D > C.
enum class Suit : std::uint8_t { kClubs = 0, kDiamonds = 1, kHearts = 2, kSpades = 3 };

// Rank::k2 == 0 ... Rank::kAce == 12.
enum class Rank : std::uint8_t {
  k2 = 0, k3, k4, k5, k6, k7, k8, k9, kTen, kJack, kQueen, kKing, kAce
};

// Suits from highest to lowest, the order used by hand notation.
inline constexpr std::array<Suit, kNumSuits> kSuitsDescending = {
    Suit::kSpades, Suit::kHearts, Suit::kDiamonds, Suit::kClubs};

inline constexpr int SuitIndex(Suit s) { return static_cast<int>(s); }
inline constexpr int RankIndex(Rank r) { return static_cast<int>(r); }

char SuitChar(Suit s);
char RankChar(Rank r);
std::optional<Suit> SuitFromChar(char c);
std::optional<Rank> RankFromChar(char c);

// A playing card. Ordered by (suit, rank) so that SA is the greatest card and
// C2 the least.
class Card {
 public:
  constexpr Card(Suit suit, Rank rank)
      : index_(static_cast<std::uint8_t>(SuitIndex(suit) * kNumRanks + RankIndex(rank))) {}

  static constexpr Card FromIndex(int index) {
    return Card(static_cast<Suit>(index / kNumRanks), static_cast<Rank>(index % kNumRanks));
  }

  // Parses a 2-character code such as "SK" or "HT". Throws ParseError.
  static Card FromCode(std::string_view code);

  constexpr Suit suit() const { return static_cast<Suit>(index_ / kNumRanks); }
  constexpr Rank rank() const { return static_cast<Rank>(index_ % kNumRanks); }
  // Dense index in [0, 52); equal to SuitIndex * 13 + RankIndex.
  constexpr int index() const { return index_; }

  std::string Code() const;

  friend constexpr auto operator<=>(const Card&, const Card&) = default;

 private:
  std::uint8_t index_;
};

// Contract denomination.
enum class Strain : std::uint8_t { kClubs = 0, kDiamonds, kHearts, kSpades, kNoTrump };

// Accepts "NT" (or "N") and the four suit letters.
Strain StrainFromString(std::string_view text);
std::string StrainToString(Strain strain);
// The trump suit, or nullopt under no trump.
std::optional<Suit> TrumpSuit(Strain strain);

}  // namespace leadinf

#endif  // LEADINF_CARD_H_
