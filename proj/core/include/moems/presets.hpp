#pragma once

#include "moems/cantilever.hpp"
#include "moems/pipeline.hpp"

namespace moems::presets {

// Bridge devices: gold, 0.5 um thick, 2.2 um over 200 nm Al2O3 (eps_r 9).
BridgeGeometry bridge(double length, double width);
BridgeGeometry fig5_bridge();       // 220 x 160 um
BridgeGeometry edfa_bridge();       // 140 x 80 um

// Erbium cavity fitted so the imaged EDFA pulses sit in the 0.3-1.5 us band
// across 20-120 kHz with tens of watts peak.
LaserParams erbium_laser();
CouplingModel erbium_imaged_coupling();
// Same cavity with the relay removed: far less light re-enters the fiber.
CouplingModel erbium_no_imaging_coupling();

// Ytterbium arm of the dual-wavelength cavity.
LaserParams ytterbium_laser();
CouplingModel ytterbium_coupling();
// Er arm pump when it shares the 30 kHz dual cavity.
LaserParams erbium_dual_laser();

// Mechanics shared by every laser preset: Q = 1, 1.5 x pull-in, 5.276 us
// off-time per period.
QSwitchScenario edfa_scenario(double frequency);
QSwitchScenario fig5_scenario();
QSwitchScenario no_imaging_scenario(double frequency = 39e3);
DualScenario dual_scenario(double frequency = 30e3);

// Cantilever mirrors: 1.5 um gold, 10 nm stress layer, 0.6 um over 1 um SiO2.
CantileverGeometry cantilever(double length, double root_width, double tip_width);
CantileverGeometry fig13_cantilever();     // 250 x 100 um, R = 1000 um
CantileverGeometry triangular_cantilever();  // 250 long, 200 -> 10 um wide

}  // namespace moems::presets
