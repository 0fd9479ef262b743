// Copyright 2026 The timbrecolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tests/oracles/generate_oracles.py. Do not edit.
#pragma once

#include <array>

namespace oracle {

struct BesselValue { int order; double x; double value; };
inline constexpr std::array<BesselValue, 108> kBessel{{
    {0, 0.25, 0.98443592929585270492},
    {1, 0.25, 0.12402597732272692273},
    {2, 0.25, 0.0077718892859626769289},
    {3, 0.25, 0.00032425125267590813096},
    {5, 0.25, 2.5365161587472414865e-7},
    {10, 0.25, 2.5628321598050106334e-16},
    {20, 0.25, 3.5624805510586983855e-37},
    {30, 0.25, 3.0438371631111801969e-60},
    {45, 0.25, 1.9186298865727264808e-97},
    {0, 1.0, 0.76519768655796655145},
    {1, 1.0, 0.44005058574493351596},
    {2, 1.0, 0.11490348493190048047},
    {3, 1.0, 0.019563353982668405919},
    {5, 1.0, 0.00024975773021123443138},
    {10, 1.0, 2.630615123687453207e-10},
    {20, 1.0, 3.8735030085246577189e-25},
    {30, 1.0, 3.4828697942514829022e-42},
    {45, 1.0, 2.3630771536244629518e-70},
    {0, 2.0, 0.22389077914123566805},
    {1, 2.0, 0.5767248077568733872},
    {2, 2.0, 0.35283402861563771915},
    {3, 2.0, 0.1289432494744020511},
    {5, 2.0, 0.0070396297558716854842},
    {10, 2.0, 2.5153862827167367096e-7},
    {20, 2.0, 3.9189728050907538391e-19},
    {30, 2.0, 3.6502562664740971052e-33},
    {45, 2.0, 8.1798392637160284676e-57},
    {0, 5.0, -0.17759677131433830435},
    {1, 5.0, -0.32757913759146522204},
    {2, 5.0, 0.046565116277752215532},
    {3, 5.0, 0.36483123061366699446},
    {5, 5.0, 0.26114054612017009005},
    {10, 5.0, 0.0014678026473104741311},
    {20, 5.0, 2.7703300521289416874e-11},
    {30, 5.0, 2.6711772782507988106e-21},
    {45, 5.0, 5.8938016032787353522e-39},
    {0, 7.5, 0.26633965788037839687},
    {1, 7.5, 0.13524842757970550518},
    {2, 7.5, -0.23027341052579026215},
    {3, 7.5, -0.25806091319346031166},
    {5, 7.5, 0.28347390516255045867},
    {10, 7.5, 0.038998257889412210093},
    {20, 7.5, 6.2960908284765196051e-8},
    {30, 7.5, 3.9705139492720908918e-16},
    {45, 7.5, 4.1724682199838822184e-31},
    {0, 10.0, -0.2459357644513483352},
    {1, 10.0, 0.04347274616886143667},
    {2, 10.0, 0.25463031368512062253},
    {3, 10.0, 0.058379379305186812343},
    {5, 10.0, -0.23406152818679364044},
    {10, 10.0, 0.2074861066333588577},
    {20, 10.0, 0.000011513369247813397783},
    {30, 10.0, 1.5510960782574670069e-12},
    {45, 10.0, 1.3753810394958548358e-25},
    {0, 12.0, 0.047689310796833536624},
    {1, 12.0, -0.22344710449062761237},
    {2, 12.0, -0.084930494878604805352},
    {3, 12.0, 0.19513693953109267725},
    {5, 12.0, -0.073470963101658581266},
    {10, 12.0, 0.30047603527126931073},
    {20, 12.0, 0.00025121327024539953203},
    {30, 12.0, 2.552259043034417146e-10},
    {45, 12.0, 3.9465589899870707626e-22},
    {0, 12.5, 0.14688405470042110231},
    {1, 12.5, -0.16548380461475971846},
    {2, 12.5, -0.17336146343878265726},
    {3, 12.5, 0.11000813631434926814},
    {5, 12.5, 0.034737699762239727682},
    {10, 12.5, 0.27887174659353570044},
    {20, 12.5, 0.00048433775975865439337},
    {30, 12.5, 7.8366311263301171435e-10},
    {45, 12.5, 2.3151532085901401596e-21},
    {0, 15.0, -0.014224472826780773234},
    {1, 15.0, 0.20510403861352276115},
    {2, 15.0, 0.04157167797525047472},
    {3, 15.0, -0.19401825782012263456},
    {5, 15.0, 0.13045613456502955267},
    {10, 15.0, -0.090071811047659053964},
    {20, 15.0, 0.0073602340792234852583},
    {30, 15.0, 1.037471020107871819e-7},
    {45, 15.0, 5.7772810300770640703e-18},
    {0, 20.0, 0.16702466434058315473},
    {1, 20.0, 0.066833124175850045579},
    {2, 20.0, -0.16034135192299815017},
    {3, 20.0, -0.098901394560449675613},
    {5, 20.0, 0.15116976798239497461},
    {10, 20.0, 0.18648255802394508321},
    {20, 20.0, 0.16474777377532653234},
    {30, 20.0, 0.00012401536360354327865},
    {45, 20.0, 9.0114462875412651957e-13},
    {0, 30.0, -0.086367983581040211336},
    {1, 30.0, -0.11875106261662293652},
    {2, 30.0, 0.078451246073265348901},
    {3, 30.0, 0.12921122875972498304},
    {5, 30.0, -0.14324029551207707699},
    {10, 30.0, -0.12987689399858876819},
    {20, 30.0, 0.0048310199934040645386},
    {30, 30.0, 0.14393585001030721029},
    {45, 30.0, 3.9157698896727344627e-6},
    {0, 50.0, 0.055812327669251815005},
    {1, 50.0, -0.097511828125175137661},
    {2, 50.0, -0.059712800794258820511},
    {3, 50.0, 0.092734804061634432021},
    {5, 50.0, -0.081400247696569639644},
    {10, 50.0, -0.11384784914946938567},
    {20, 50.0, -0.11670435275957973734},
    {30, 50.0, 0.048434257245509417485},
    {45, 50.0, 0.13228035222445817678},
}};

struct EnergyOrder { double index; int order; };
inline constexpr std::array<EnergyOrder, 6> kEnergyOrder{{
    {0.0, 0},
    {1.0, 6},
    {2.0, 8},
    {5.0, 13},
    {10.0, 20},
    {20.0, 32},
}};

inline constexpr std::array<EnergyOrder, 6> kTruncationOrder{{
    {0.0, 0},
    {1.0, 10},
    {2.0, 13},
    {5.0, 19},
    {10.0, 28},
    {20.0, 42},
}};

inline constexpr int kSidebandOrderI5 = 19;
inline constexpr std::array<double, 39> kSidebandAmpsI5{{
    -2.1828258418356214584e-10,
    1.6312443392737828915e-9,
    -1.1526676658587674673e-8,
    7.6750156939122404884e-8,
    -4.7967432775179571658e-7,
    2.8012958095716518946e-6,
    -0.000015207582205849454893,
    0.000076278131660845513551,
    -0.00035092744976620901015,
    0.0014678026473104741311,
    -0.0055202831394756875143,
    0.01840521665480200092,
    -0.053376410155890715431,
    0.13104873178169200229,
    -0.26114054612017009005,
    0.39123236045864817782,
    -0.36483123061366699446,
    0.046565116277752215532,
    0.32757913759146522204,
    -0.17759677131433830435,
    -0.32757913759146522204,
    0.046565116277752215532,
    0.36483123061366699446,
    0.39123236045864817782,
    0.26114054612017009005,
    0.13104873178169200229,
    0.053376410155890715431,
    0.01840521665480200092,
    0.0055202831394756875143,
    0.0014678026473104741311,
    0.00035092744976620901015,
    0.000076278131660845513551,
    0.000015207582205849454893,
    2.8012958095716518946e-6,
    4.7967432775179571658e-7,
    7.6750156939122404884e-8,
    1.1526676658587674673e-8,
    1.6312443392737828915e-9,
    2.1828258418356214584e-10,
}};

inline constexpr double kYbarPeakNm = 555.0;

// Weighted |a_n| average over the folded I=2 spectrum, before projection.
inline constexpr std::array<double, 3> kFmI2RawXyz{0.32049626684399235, 0.21907556743110077, 0.11915823817131414};
inline constexpr std::array<int, 3> kFmI2Srgb{210, 91, 89};

inline constexpr std::array<int, 3> kFmI0Srgb{1, 0, 0};

// Flat 81-line spectrum, equal-energy normalized chromaticity.
inline constexpr double kWhitenessX = 0.33318709282329245;
inline constexpr double kWhitenessY = 0.33303472240971677;

inline constexpr std::array<int, 3> kD65Srgb{246, 246, 246};
inline constexpr std::array<int, 3> kUnitCubeSrgb{255, 249, 244};

}  // namespace oracle
