// Generated by gen_fixtures.py; do not edit by hand.
#pragma once
#include <complex>
namespace fixtures {
using cd = std::complex<double>;
inline const struct { cd z, val; } gamma_values[] = {
  {{0.75, 0.0}, {1.2254167024651776451, 0.0}},
  {{0.5, 0.0}, {1.7724538509055160273, 0.0}},
  {{3.0, 4.0}, {0.0052255384713692141947, -0.17254707929430018772}},
  {{10.0, 30.0}, {-8.5429315061699318786e-7, -6.586002584109200444e-7}},
  {{0.5, 200.0}, {3.8818334844970341208e-137, -8.2865414340609543392e-137}},
  {{50.0, 200.0}, {1.5359182573755026797e-23, 1.1867750406477427143e-22}},
  {{-9.5, 0.5}, {4.5521951435248668322e-7, 1.0218645898833727266e-6}},
  {{-4.5, 137.0}, {4.729079829448340993e-105, 1.7365831394576929131e-104}},
  {{1.0, -50.0}, {-4.0823246773266695573e-34, -1.3158660530988403138e-33}},
  {{25.0, -100.0}, {1.8922684408765039651e-19, -3.625940167459593299e-20}},
  {{0.94999999999999995559, 0.0}, {1.0314533171290322265, 0.0}},
  {{0.8499999999999999778, 0.0}, {1.1124837369484652673, 0.0}},
  {{2.0, 0.0}, {1.0, 0.0}},
};
inline const struct { cd z, val; } zeta_values[] = {
  {{3.0, 0.0}, {1.2020569031595942854, 0.0}},
  {{2.0, 0.0}, {1.6449340668482264365, 0.0}},
  {{0.0, 0.0}, {-0.5, 0.0}},
  {{0.5, 14.13472499999999954}, {1.767429841384903915e-8, -1.1102028930923116747e-7}},
  {{0.5, 200.0}, {4.5905773749690526592, -3.1894012475791441342}},
  {{-4.5, 3.0}, {-0.09701873948007261069, 0.024608755647534171716}},
  {{1.5, -80.0}, {1.1252349641525000426, -0.55046688472387400411}},
  {{1.000099999999999989, 0.0}, {10000.57722294753897, 0.0}},
  {{-2.5, 150.0}, {-697.6751608727475833, 12508.016337893205791}},
  {{4.0, 1.0}, {1.0535076344416207331, -0.058042295306486234156}},
};
inline const struct { cd s; double a; cd val; } hurwitz_values[] = {
  {{2.0, 0.0}, 0.25, {17.197329154507110739, 0.0}},
  {{0.5, 30.0}, 0.125, {0.47614608460606190587, 0.34562816745206605748}},
  {{-3.0, 5.0}, 0.69999999999999995559, {-0.52663010305146063368, -0.27151458077882394334}},
  {{1.5, 0.0}, 1.0, {2.6123753486854883433, 0.0}},
  {{0.5, 200.0}, 0.375, {-0.71051701737054639642, 2.6451169495318377889}},
  {{-5.0, 100.0}, 0.9000000000000000222, {2948575.6396063177406, 2886052.0591181969428}},
  {{6.0, -12.0}, 0.010000000000000000208, {280361597561.86407871, 959894460143.05227866}},
};
inline const struct { double sigma; double val; } l_chi8_values[] = {
  {0.0, 1.0},
  {0.25, 1.0671060728769239139},
  {0.5, 1.1004214095255484528},
  {0.75, 1.112092364456230614},
  {1.0, 1.1107207345395915618},
  {2.0, 1.0647341710435033704},
};
inline const double stieltjes[11] = {
  0.57721566490153286061,
  -0.072815845483676724861,
  -0.0096903631928723184845,
  0.0020538344203033458662,
  0.0023253700654673000575,
  0.00079332381730106270175,
  -0.00023876934543019960987,
  -0.00052728956705775104607,
  -0.0003521233538030395096,
  -0.000034394774418088048178,
  0.00020533281490906479468,
};
}  // namespace fixtures
