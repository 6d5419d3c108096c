#pragma once

#include "floodwatch/colour.hpp"

namespace floodwatch {

/// Daily rain band of one colour: [lower, upper), upper is +inf for Red.
struct RainBand {
    double lowerMm = 0.0;
    double upperMm = 0.0;

    bool contains(double rainMm) const { return rainMm >= lowerMm && rainMm < upperMm; }
};

/// Mapping between vigilance colours and expected daily rain.
///
/// Bands are contiguous and cover [0, inf). Each colour also carries the
/// official risk value (mm) a fully trusting resident expects when that
/// colour is announced.
class ColourScale {
public:
    /// Throws ConfigError unless 0 < yellow < orange < red and every official
    /// risk lies inside its colour's band.
    ColourScale(double yellowLowerMm, double orangeLowerMm, double redLowerMm, PerColour<double> officialRiskMm);

    /// Green [0,10), Yellow [10,50), Orange [50,100), Red [100,inf);
    /// official risk 5, 30, 75, 150 mm.
    static ColourScale standard();

    /// Band midpoints for the bounded colours and 1.5x the lower bound for Red.
    static ColourScale fromBounds(double yellowLowerMm, double orangeLowerMm, double redLowerMm);

    RainBand band(VigilanceColour c) const;
    double officialRisk(VigilanceColour c) const { return officialRisk_[c]; }
    double lowerBound(VigilanceColour c) const { return lower_[c]; }

    /// Colour whose band contains `rainMm` (rainMm >= 0).
    VigilanceColour colourFor(double rainMm) const;

    friend bool operator==(const ColourScale&, const ColourScale&) = default;

private:
    PerColour<double> lower_{};
    PerColour<double> officialRisk_{};
};

inline ColourScale defaultColourScale() { return ColourScale::standard(); }
inline VigilanceColour colourFor(const ColourScale& scale, double rainMm) { return scale.colourFor(rainMm); }

}  // namespace floodwatch
