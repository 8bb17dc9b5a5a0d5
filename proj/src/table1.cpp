#include "atomwalk/catalog.hpp"

namespace atomwalk {

// Masses (u) and resonance wavelengths (nm) as tabulated; labels transcribed to ASCII.
// The Cd-114 ground term is kept verbatim ("2S0").
const Catalog& embedded_table1() {
  static const Catalog table(
      {
          {"Li-7", 7.016004, "2s 2S1/2 - 2p 2P0 1/2", 670.7926},
          {"C-12", 12.000000, "2s2 2p2 3P0 - 2s2 2p(2P0) 3s 3P0 1", 165.6928},
          {"Ne-20", 19.992435, "2p6 1S0 - 2p5(2P0 1/2) 4s 2[1/2]0", 626.8232},
          {"Mg-24", 23.985042, "3s2 1S0 - 3s3p 1P0 1", 285.21251},
          {"Mg-25", 24.985837, "3s2 1S0 - 3s3p 1P0 1", 285.21251},
          {"Mg-26", 25.982593, "3s2 1S0 - 3s3p 1P0 1", 285.21251},
          {"Si-28", 27.976927, "3s2 3p2 3P0 - 3s2 3p4s 3P0 1", 251.4316},
          {"Ca-40", 39.962591, "4s2 1S0 - 4s4p 1P0 1", 422.6727},
          {"Ti-48", 47.947947, "3d2 4s2 a3F2 - 3d2(3F) 4s4p(3P0) z3D0 1", 501.4186},
          {"Fe-56", 55.934939, "3d6 4s2 a5D4 - 3d6(5D) 4s4p(3P) z5P0 3", 248.32708},
          {"Co-59", 58.933198, "3d7 4s2 a4F9/2 - 3d7(4F) 4s4p(3P0) z4F0 9/2", 352.6850},
          {"Ga-69", 68.925580, "4s2 4p 2P0 1/2 - 4s2 5s 2S1/2", 403.2984},
          {"Rb-85", 84.911794, "5s 2S1/2 - 5p 2P0 3/2", 780.027},
          {"Rb-87", 86.909187, "5s 2S1/2 - 5p 2P0 3/2", 780.027},
          {"Sr-87", 86.908884, "5s2 1S0 - 5s5p 1P0 1", 460.733},
          {"Nb-93", 92.906377, "4d4 (a5D) 5s a6D1/2 - 4d3 5s(a5P) 5p y6P0 3/2", 353.530},
          {"Ag-107", 106.905092, "4d10(1S) 5s 2S1/2 - 4d10(1S) 5p 2P0 3/2", 328.0680},
          {"Cd-114", 113.903357, "5s2 2S0 - 5s5p 1P0 1", 228.8022},
          {"In-115", 114.903800, "5p 2P0 1/2 - 6s 2S1/2", 410.17504},
          {"Cs-133", 132.905429, "6s 2S1/2 - 6p 2P0 3/2", 852.113},
          {"Eu-153", 152.921225, "4f7 6s2 a8S0 7/2 - 4f7(8S0) 6s6p (1P0) y8P5/2", 466.188},
          {"Yb-173", 172.938208, "4f14(1S) 6s2 1S0 - 4f14(1S) 6s6p 1P0 1", 555.6466},
          {"Au-197", 196.966543, "5d10 6s 2S1/2 - 5d10 6p 2P0 1/2", 267.5954},
          {"U-238", 238.050784, "5f3(4I0) 6d7s2 5L0 6 - 5f3 6d2 7p 7N7", 358.48774},
      },
      "table1-embedded");
  return table;
}

}  // namespace atomwalk
