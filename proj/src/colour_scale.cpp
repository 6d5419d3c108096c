#include "floodwatch/colour_scale.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "floodwatch/error.hpp"

namespace floodwatch {

ColourScale::ColourScale(double yellowLowerMm, double orangeLowerMm, double redLowerMm,
                         PerColour<double> officialRiskMm)
    : officialRisk_(officialRiskMm) {
    lower_[VigilanceColour::Green] = 0.0;
    lower_[VigilanceColour::Yellow] = yellowLowerMm;
    lower_[VigilanceColour::Orange] = orangeLowerMm;
    lower_[VigilanceColour::Red] = redLowerMm;

    if (!(std::isfinite(yellowLowerMm) && std::isfinite(orangeLowerMm) && std::isfinite(redLowerMm))) {
        throw ConfigError("scale", "band bounds must be finite");
    }
    if (!(0.0 < yellowLowerMm && yellowLowerMm < orangeLowerMm && orangeLowerMm < redLowerMm)) {
        throw ConfigError("scale", "band bounds must satisfy 0 < yellow < orange < red");
    }
    for (auto c : kAllColours) {
        if (!band(c).contains(officialRisk_[c])) {
            throw ConfigError("scale.official_risk." + std::string(toToken(c)), "official risk must lie inside its band");
        }
    }
}

ColourScale ColourScale::standard() { return fromBounds(10.0, 50.0, 100.0); }

ColourScale ColourScale::fromBounds(double yellowLowerMm, double orangeLowerMm, double redLowerMm) {
    PerColour<double> risk;
    risk[VigilanceColour::Green] = yellowLowerMm / 2.0;
    risk[VigilanceColour::Yellow] = (yellowLowerMm + orangeLowerMm) / 2.0;
    risk[VigilanceColour::Orange] = (orangeLowerMm + redLowerMm) / 2.0;
    risk[VigilanceColour::Red] = 1.5 * redLowerMm;
    return ColourScale(yellowLowerMm, orangeLowerMm, redLowerMm, risk);
}

RainBand ColourScale::band(VigilanceColour c) const {
    const double upper = c == VigilanceColour::Red ? std::numeric_limits<double>::infinity()
                                                   : lower_[static_cast<VigilanceColour>(index(c) + 1)];
    return RainBand{lower_[c], upper};
}

VigilanceColour ColourScale::colourFor(double rainMm) const {
    if (rainMm >= lower_[VigilanceColour::Red]) return VigilanceColour::Red;
    if (rainMm >= lower_[VigilanceColour::Orange]) return VigilanceColour::Orange;
    if (rainMm >= lower_[VigilanceColour::Yellow]) return VigilanceColour::Yellow;
    return VigilanceColour::Green;
}

}  // namespace floodwatch
