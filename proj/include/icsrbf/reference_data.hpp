#pragma once

// Published comparison values, one entry per printed table cell.
// Mirrors data/reference_values.csv; tests check the two stay identical.

#include <array>
#include <string_view>

namespace icsrbf {

struct ReferenceEntry {
  std::string_view problem;
  double param;
  double x;
  double y_ref;
  std::string_view source;
  int table_id;
};

inline constexpr std::array<ReferenceEntry, 200> kReferenceTable{{
    {"lane-emden", 0, 2.44948974, 0, "ICSRBF", 2},
    {"lane-emden", 0, 2.44948974, 0, "Horedt", 2},
    {"lane-emden", 1, 3.14159265, 0, "ICSRBF", 2},
    {"lane-emden", 1, 3.14159265, 0, "Horedt", 2},
    {"lane-emden", 1.5, 3.65375388, 0, "ICSRBF", 2},
    {"lane-emden", 1.5, 3.65375374, 0, "Horedt", 2},
    {"lane-emden", 2, 4.35287462, 0, "ICSRBF", 2},
    {"lane-emden", 2, 4.35287460, 0, "Horedt", 2},
    {"lane-emden", 2.5, 5.35527531, 0, "ICSRBF", 2},
    {"lane-emden", 2.5, 5.35527546, 0, "Horedt", 2},
    {"lane-emden", 3, 6.89684855, 0, "ICSRBF", 2},
    {"lane-emden", 3, 6.89684862, 0, "Horedt", 2},
    {"lane-emden", 4, 14.9715808, 0, "ICSRBF", 2},
    {"lane-emden", 4, 14.9715463, 0, "Horedt", 2},
    {"lane-emden", 2, 0.00, 1.0000000, "ICSRBF", 3},
    {"lane-emden", 2, 0.00, 1.0000000, "Horedt", 3},
    {"lane-emden", 2, 0.1, 0.9983350, "ICSRBF", 3},
    {"lane-emden", 2, 0.1, 0.9983349, "Horedt", 3},
    {"lane-emden", 2, 0.5, 0.9593527, "ICSRBF", 3},
    {"lane-emden", 2, 0.5, 0.9593527, "Horedt", 3},
    {"lane-emden", 2, 1.0, 0.8486541, "ICSRBF", 3},
    {"lane-emden", 2, 1.0, 0.8486541, "Horedt", 3},
    {"lane-emden", 2, 3.0, 0.2418240, "ICSRBF", 3},
    {"lane-emden", 2, 3.0, 0.2418241, "Horedt", 3},
    {"lane-emden", 2, 4.0, 0.0488398, "ICSRBF", 3},
    {"lane-emden", 2, 4.0, 0.0488401, "Horedt", 3},
    {"lane-emden", 2, 4.3, 0.0068107, "ICSRBF", 3},
    {"lane-emden", 2, 4.3, 0.0068109, "Horedt", 3},
    {"lane-emden", 2, 4.35, 0.0003660, "ICSRBF", 3},
    {"lane-emden", 2, 4.35, 0.0003660, "Horedt", 3},
    {"lane-emden", 3, 0.00, 1.0000000, "ICSRBF", 4},
    {"lane-emden", 3, 0.00, 1.0000000, "Horedt", 4},
    {"lane-emden", 3, 0.1, 0.9983358, "ICSRBF", 4},
    {"lane-emden", 3, 0.1, 0.9983358, "Horedt", 4},
    {"lane-emden", 3, 0.5, 0.9598391, "ICSRBF", 4},
    {"lane-emden", 3, 0.5, 0.9598391, "Horedt", 4},
    {"lane-emden", 3, 1.0, 0.8550575, "ICSRBF", 4},
    {"lane-emden", 3, 1.0, 0.8550576, "Horedt", 4},
    {"lane-emden", 3, 5.0, 0.1108198, "ICSRBF", 4},
    {"lane-emden", 3, 5.0, 0.1108198, "Horedt", 4},
    {"lane-emden", 3, 6.0, 0.0437379, "ICSRBF", 4},
    {"lane-emden", 3, 6.0, 0.0437380, "Horedt", 4},
    {"lane-emden", 3, 6.8, 0.0041677, "ICSRBF", 4},
    {"lane-emden", 3, 6.8, 0.0041678, "Horedt", 4},
    {"lane-emden", 4, 0.00, 1.0000000, "ICSRBF", 5},
    {"lane-emden", 4, 0.00, 1.0000000, "Horedt", 5},
    {"lane-emden", 4, 0.1, 0.9983401, "ICSRBF", 5},
    {"lane-emden", 4, 0.1, 0.9983367, "Horedt", 5},
    {"lane-emden", 4, 0.2, 0.9933921, "ICSRBF", 5},
    {"lane-emden", 4, 0.2, 0.9933862, "Horedt", 5},
    {"lane-emden", 4, 0.5, 0.9603107, "ICSRBF", 5},
    {"lane-emden", 4, 0.5, 0.9603109, "Horedt", 5},
    {"lane-emden", 4, 1.0, 0.8608195, "ICSRBF", 5},
    {"lane-emden", 4, 1.0, 0.8608138, "Horedt", 5},
    {"lane-emden", 4, 5.0, 0.2359598, "ICSRBF", 5},
    {"lane-emden", 4, 5.0, 0.2359227, "Horedt", 5},
    {"lane-emden", 4, 10, 0.05965343, "ICSRBF", 5},
    {"lane-emden", 4, 10, 0.0596727, "Horedt", 5},
    {"lane-emden", 4, 14, 0.0083590, "ICSRBF", 5},
    {"lane-emden", 4, 14, 0.0083305, "Horedt", 5},
    {"lane-emden", 4, 14.9, 0.00058404, "ICSRBF", 5},
    {"lane-emden", 4, 14.9, 0.0005764, "Horedt", 5},
    {"isothermal", 0, 0.00, 0.0000000000, "ICSRBF", 8},
    {"isothermal", 0, 0.00, 0.0000000000, "HFC", 8},
    {"isothermal", 0, 0.00, 0.0000000000, "Adomian", 8},
    {"isothermal", 0, 0.1, -0.0016658338, "ICSRBF", 8},
    {"isothermal", 0, 0.1, -0.0016664188, "HFC", 8},
    {"isothermal", 0, 0.1, -0.0016658339, "Adomian", 8},
    {"isothermal", 0, 0.2, -0.006533671, "ICSRBF", 8},
    {"isothermal", 0, 0.2, -0.0066539713, "HFC", 8},
    {"isothermal", 0, 0.2, -0.0066533671, "Adomian", 8},
    {"isothermal", 0, 0.5, -0.0411539573, "ICSRBF", 8},
    {"isothermal", 0, 0.5, -0.0411545150, "HFC", 8},
    {"isothermal", 0, 0.5, -0.0411539568, "Adomian", 8},
    {"isothermal", 0, 1.0, -0.1588276775, "ICSRBF", 8},
    {"isothermal", 0, 1.0, -0.1588281737, "HFC", 8},
    {"isothermal", 0, 1.0, -0.1588273537, "Adomian", 8},
    {"isothermal", 0, 1.5, -0.3380194248, "ICSRBF", 8},
    {"isothermal", 0, 1.5, -0.3380198308, "HFC", 8},
    {"isothermal", 0, 1.5, -0.3380131103, "Adomian", 8},
    {"isothermal", 0, 2.0, -0.5598230044, "ICSRBF", 8},
    {"isothermal", 0, 2.0, -0.5598233120, "HFC", 8},
    {"isothermal", 0, 2.0, -0.5599626601, "Adomian", 8},
    {"isothermal", 0, 2.5, -0.8063408707, "ICSRBF", 8},
    {"isothermal", 0, 2.5, -0.8063410846, "HFC", 8},
    {"isothermal", 0, 2.5, -0.8100196713, "Adomian", 8},
    {"white-dwarf", 0.1, 0.0001, 0.999999, "ICSRBF", 9},
    {"white-dwarf", 0.1, 0.0001, 0.999999, "MHAM", 9},
    {"white-dwarf", 0.1, 0.0001, 1, "Haar", 9},
    {"white-dwarf", 0.1, 0.01, 0.999985, "ICSRBF", 9},
    {"white-dwarf", 0.1, 0.01, 0.999985, "MHAM", 9},
    {"white-dwarf", 0.1, 0.01, 0.999986, "Haar", 9},
    {"white-dwarf", 0.1, 0.1, 0.998579, "ICSRBF", 9},
    {"white-dwarf", 0.1, 0.1, 0.998578, "MHAM", 9},
    {"white-dwarf", 0.1, 0.1, 0.998581, "Haar", 9},
    {"white-dwarf", 0.1, 0.2, 0.994340, "ICSRBF", 9},
    {"white-dwarf", 0.1, 0.2, 0.994340, "MHAM", 9},
    {"white-dwarf", 0.1, 0.2, 0.994379, "Haar", 9},
    {"white-dwarf", 0.1, 0.4, 0.977738, "ICSRBF", 9},
    {"white-dwarf", 0.1, 0.4, 0.977738, "MHAM", 9},
    {"white-dwarf", 0.1, 0.4, 0.978345, "Haar", 9},
    {"white-dwarf", 0.1, 0.6, 0.951270, "ICSRBF", 9},
    {"white-dwarf", 0.1, 0.6, 0.951263, "MHAM", 9},
    {"white-dwarf", 0.1, 0.6, 0.953273, "Haar", 9},
    {"white-dwarf", 0.1, 0.7, 0.934823, "ICSRBF", 9},
    {"white-dwarf", 0.1, 0.7, 0.934801, "MHAM", 9},
    {"white-dwarf", 0.1, 0.7, 0.936497, "Haar", 9},
    {"white-dwarf", 0.1, 0.9, 0.896673, "ICSRBF", 9},
    {"white-dwarf", 0.1, 0.9, 0.896522, "MHAM", 9},
    {"white-dwarf", 0.1, 0.9, 0.895488, "Haar", 9},
    {"white-dwarf", 0.2, 0.0001, 0.999999, "ICSRBF", 9},
    {"white-dwarf", 0.2, 0.0001, 0.999999, "MHAM", 9},
    {"white-dwarf", 0.2, 0.0001, 1, "Haar", 9},
    {"white-dwarf", 0.2, 0.01, 0.999988, "ICSRBF", 9},
    {"white-dwarf", 0.2, 0.01, 0.999988, "MHAM", 9},
    {"white-dwarf", 0.2, 0.01, 0.999988, "Haar", 9},
    {"white-dwarf", 0.2, 0.1, 0.998809, "ICSRBF", 9},
    {"white-dwarf", 0.2, 0.1, 0.998809, "MHAM", 9},
    {"white-dwarf", 0.2, 0.1, 0.998580, "Haar", 9},
    {"white-dwarf", 0.2, 0.2, 0.995255, "ICSRBF", 9},
    {"white-dwarf", 0.2, 0.2, 0.995251, "MHAM", 9},
    {"white-dwarf", 0.2, 0.2, 0.995296, "Haar", 9},
    {"white-dwarf", 0.2, 0.4, 0.981320, "ICSRBF", 9},
    {"white-dwarf", 0.2, 0.4, 0.981320, "MHAM", 9},
    {"white-dwarf", 0.2, 0.4, 0.981931, "Haar", 9},
    {"white-dwarf", 0.2, 0.6, 0.959049, "ICSRBF", 9},
    {"white-dwarf", 0.2, 0.6, 0.959045, "MHAM", 9},
    {"white-dwarf", 0.2, 0.6, 0.961128, "Haar", 9},
    {"white-dwarf", 0.2, 0.7, 0.945179, "ICSRBF", 9},
    {"white-dwarf", 0.2, 0.7, 0.945165, "MHAM", 9},
    {"white-dwarf", 0.2, 0.7, 0.947116, "Haar", 9},
    {"white-dwarf", 0.2, 0.9, 0.912913, "ICSRBF", 9},
    {"white-dwarf", 0.2, 0.9, 0.912812, "MHAM", 9},
    {"white-dwarf", 0.2, 0.9, 0.912833, "Haar", 9},
    {"white-dwarf", 0.3, 0.0001, 0.999999, "ICSRBF", 9},
    {"white-dwarf", 0.3, 0.0001, 0.999999, "MHAM", 9},
    {"white-dwarf", 0.3, 0.0001, 1, "Haar", 9},
    {"white-dwarf", 0.3, 0.01, 0.999990, "ICSRBF", 9},
    {"white-dwarf", 0.3, 0.01, 0.999990, "MHAM", 9},
    {"white-dwarf", 0.3, 0.01, 0.999999, "Haar", 9},
    {"white-dwarf", 0.3, 0.1, 0.999025, "ICSRBF", 9},
    {"white-dwarf", 0.3, 0.1, 0.999025, "MHAM", 9},
    {"white-dwarf", 0.3, 0.1, 0.999028, "Haar", 9},
    {"white-dwarf", 0.3, 0.2, 0.996115, "ICSRBF", 9},
    {"white-dwarf", 0.3, 0.2, 0.996115, "MHAM", 9},
    {"white-dwarf", 0.3, 0.2, 0.996154, "Haar", 9},
    {"white-dwarf", 0.3, 0.4, 0.984690, "ICSRBF", 9},
    {"white-dwarf", 0.3, 0.4, 0.984690, "MHAM", 9},
    {"white-dwarf", 0.3, 0.4, 0.985295, "Haar", 9},
    {"white-dwarf", 0.3, 0.6, 0.966384, "ICSRBF", 9},
    {"white-dwarf", 0.3, 0.6, 0.966381, "MHAM", 9},
    {"white-dwarf", 0.3, 0.6, 0.968464, "Haar", 9},
    {"white-dwarf", 0.3, 0.7, 0.954953, "ICSRBF", 9},
    {"white-dwarf", 0.3, 0.7, 0.954944, "MHAM", 9},
    {"white-dwarf", 0.3, 0.7, 0.956942, "Haar", 9},
    {"white-dwarf", 0.3, 0.9, 0.928280, "ICSRBF", 9},
    {"white-dwarf", 0.3, 0.9, 0.928216, "MHAM", 9},
    {"white-dwarf", 0.3, 0.9, 0.928599, "Haar", 9},
    {"sinh", 0, 0.00, 1.0000000000, "ICSRBF", 10},
    {"sinh", 0, 0.00, 1.0000000000, "HFC", 10},
    {"sinh", 0, 0.00, 1.0000000000, "Adomian", 10},
    {"sinh", 0, 0.1, 0.9980430038, "ICSRBF", 10},
    {"sinh", 0, 0.1, 0.9981138095, "HFC", 10},
    {"sinh", 0, 0.1, 0.9980428414, "Adomian", 10},
    {"sinh", 0, 0.2, 0.9921896287, "ICSRBF", 10},
    {"sinh", 0, 0.2, 0.9922758837, "HFC", 10},
    {"sinh", 0, 0.2, 0.9921894348, "Adomian", 10},
    {"sinh", 0, 0.5, 0.9519612468, "ICSRBF", 10},
    {"sinh", 0, 0.5, 0.9520376245, "HFC", 10},
    {"sinh", 0, 0.5, 0.9519611019, "Adomian", 10},
    {"sinh", 0, 1.0, 0.8182430031, "ICSRBF", 10},
    {"sinh", 0, 1.0, 0.8183047481, "HFC", 10},
    {"sinh", 0, 1.0, 0.8182516669, "Adomian", 10},
    {"sinh", 0, 1.5, 0.6254386159, "ICSRBF", 10},
    {"sinh", 0, 1.5, 0.6254886192, "HFC", 10},
    {"sinh", 0, 1.5, 0.6258916077, "Adomian", 10},
    {"sinh", 0, 2.0, 0.4066218732, "ICSRBF", 10},
    {"sinh", 0, 2.0, 0.4066479695, "HFC", 10},
    {"sinh", 0, 2.0, 0.4136691039, "Adomian", 10},
    {"sin", 0, 0.0, 1.0000000000, "ICSRBF", 11},
    {"sin", 0, 0.0, 1.0000000000, "HFC", 11},
    {"sin", 0, 0.0, 1.0000000000, "Adomian", 11},
    {"sin", 0, 0.1, 0.9985979436, "ICSRBF", 11},
    {"sin", 0, 0.1, 0.9986051425, "HFC", 11},
    {"sin", 0, 0.1, 0.9985979358, "Adomian", 11},
    {"sin", 0, 0.2, 0.9943962892, "ICSRBF", 11},
    {"sin", 0, 0.2, 0.9944062706, "HFC", 11},
    {"sin", 0, 0.2, 0.9943962733, "Adomian", 11},
    {"sin", 0, 0.5, 0.9651778048, "ICSRBF", 11},
    {"sin", 0, 0.5, 0.9651881683, "HFC", 11},
    {"sin", 0, 0.5, 0.9651777886, "Adomian", 11},
    {"sin", 0, 1.0, 0.8636811302, "ICSRBF", 11},
    {"sin", 0, 1.0, 0.8636881301, "HFC", 11},
    {"sin", 0, 1.0, 0.8636811027, "Adomian", 11},
    {"sin", 0, 1.5, 0.7050451897, "ICSRBF", 11},
    {"sin", 0, 1.5, 0.7050524103, "HFC", 11},
    {"sin", 0, 1.5, 0.7050419247, "Adomian", 11},
    {"sin", 0, 2.0, 0.5064632371, "ICSRBF", 11},
    {"sin", 0, 2.0, 0.5064687568, "HFC", 11},
    {"sin", 0, 2.0, 0.5063720330, "Adomian", 11},
}};

}  // namespace icsrbf
