#include "leadinf/deal_view.h"

#include <optional>
#include <sstream>

#include "leadinf/errors.h"

namespace leadinf {

DealView::DealView(Hand declarer, Hand dummy, Strain strain)
    : declarer_(declarer), dummy_(dummy), strain_(strain) {
  if (declarer.size() != kHandSize) {
    throw InvalidDeal("declarer hand has " + std::to_string(declarer.size()) +
                      " cards, expected 13");
  }
  if (dummy.size() != kHandSize) {
    throw InvalidDeal("dummy hand has " + std::to_string(dummy.size()) + " cards, expected 13");
  }
  if (!(declarer & dummy).empty()) {
    throw InvalidDeal("declarer and dummy share " + FormatHand(declarer & dummy));
  }
  hidden_ = Hand::FullDeck() - declarer - dummy;
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

DealView ParseDealText(std::string_view text) {
  std::optional<Hand> declarer, dummy;
  std::optional<Strain> strain;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto colon = view.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("deal line " + std::to_string(line_no) + ": expected 'key: value'");
    }
    const std::string_view key = Trim(view.substr(0, colon));
    const std::string_view value = Trim(view.substr(colon + 1));
    if (key == "declarer") {
      declarer = ParseHand(value);
    } else if (key == "dummy") {
      dummy = ParseHand(value);
    } else if (key == "strain") {
      strain = StrainFromString(value);
    } else {
      throw ParseError("deal line " + std::to_string(line_no) + ": unknown key '" +
                       std::string(key) + "'");
    }
  }
  if (!declarer || !dummy || !strain) {
    throw ParseError("deal text needs declarer, dummy and strain lines");
  }
  return DealView(*declarer, *dummy, *strain);
}

std::string FormatDealText(const DealView& dv) {
  return "declarer: " + FormatHand(dv.declarer()) + "\ndummy: " + FormatHand(dv.dummy()) +
         "\nstrain: " + StrainToString(dv.strain()) + "\n";
}

}  // namespace leadinf
