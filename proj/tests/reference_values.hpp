// Generated by tests/oracles/gen_reference.py (mpmath, 50 digits). Do not edit.
#pragma once

namespace normmax::reference {

struct SurvivalPoint {
  double x;
  double value;
  double log_value;
};

inline constexpr SurvivalPoint kSurvival[] = {
    {-40.0, 1.0, 0.0},
    {-37.5, 1.0, 0.0},
    {-35.0, 1.0, 0.0},
    {-32.5, 1.0, 0.0},
    {-30.0, 1.0, 0.0},
    {-27.5, 1.0, 0.0},
    {-25.0, 1.0, 0.0},
    {-22.5, 1.0, 0.0},
    {-20.0, 1.0, 0.0},
    {-17.5, 1.0, 0.0},
    {-15.0, 1.0, -4.0091470651382934692e-51},
    {-12.5, 1.0, -3.7325642988777137612e-36},
    {-10.0, 1.0, -7.619853024160526066e-24},
    {-7.5, 0.99999999999996809108, -3.1908916729109471367e-14},
    {-5.0, 0.99999971334842812081, -2.8665161296376359338e-7},
    {-2.5, 0.99379033467422386483, -0.006229025485860002381},
    {0.0, 0.5, -0.69314718055994530942},
    {2.5, 0.006209665325776135167, -5.0816482772786904984},
    {5.0, 2.8665157187919391167e-7, -15.064998393988725736},
    {7.5, 3.1908916729108962278e-14, -31.075890902890001243},
    {10.0, 7.619853024160526066e-24, -53.231285150512470578},
    {12.5, 3.7325642988777133772e-36, -81.575967870743883217},
    {15.0, 3.6709661993127508858e-51, -116.13138484571169524},
    {17.5, 7.1634587662350358454e-69, -156.90937848434641778},
    {20.0, 2.7536241186062336951e-89, -203.91715537109726394},
    {22.5, 2.075310799066354583e-112, -257.15941949018418048},
    {25.0, 3.0566967063825609164e-138, -316.63940800802025894},
    {27.5, 8.7781705568780837723e-167, -382.35944250888983283},
    {30.0, 4.9067139271481870595e-198, -454.32124395634319711},
    {32.5, 5.3314243596788040993e-232, -532.52612313768029991},
    {35.0, 1.124910706472406244e-268, -616.97510126192251347},
    {37.5, 0.0, -707.66898931750719107},
    {40.0, 0.0, -804.60844201375378817},
    {0.1, 0.46017216272297101853, -0.77615459273027332078},
    {0.5, 0.30853753872598689636, -1.1759117615936186089},
    {1, 0.15865525393145705141, -1.8410216450092635058},
    {1.5, 0.066807201268858066004, -2.705944400823889807},
    {3, 0.0013498980316300945267, -6.6077262215103495433},
    {4.5, 3.3976731247300604017e-6, -12.592419735713078666},
    {5.5, 1.8989562465887719384e-8, -17.779376352625260511},
    {7, 1.2798125438858350044e-12, -27.384307498811075243},
    {9, 1.1285884059538406477e-19, -43.628149113332115497},
    {37.5, 0.0, -707.66898931750719107},
    {38.5, 0.0, -745.69527029041108133},
    {39.9, 0.0, -800.61094201051193135},
};

struct MillsPoint {
  double x;
  double mills;
};

inline constexpr MillsPoint kMills[] = {
    {0, 1.2533141373155002512},
    {0.25, 1.0378245758537268123},
    {1, 0.65567954241879847154},
    {2, 0.42136922928805447322},
    {3.9, 0.24210933472105986796},
    {4.1, 0.23142643286975405092},
    {6, 0.16237766089686746182},
    {10, 0.099028596471731921395},
    {20, 0.049875925981836783658},
    {40, 0.024984404205720571147},
};

struct LambertPoint {
  double t;
  double w;
};

inline constexpr LambertPoint kLambert[] = {
    {1e-6, 9.9999900000149995208e-7},
    {0.5, 0.35173371124919582602},
    {1, 0.567143290409783873},
    {10, 1.7455280027406993831},
    {1e6, 11.383358086140052622},
    {1e100, 224.84310644511850156},
    {1e300, 684.24720862976084929},
};

// Exact b_n = Q^{-1}(1/n) and Hall's b*_n = sqrt(W(n^2/2pi)) at n = 10^k.
struct NormingPoint {
  int k;
  double exact_b;
  double hall_b_star;
};

inline constexpr NormingPoint kNorming[] = {
    {1, 1.281551565544600467, 1.431653790014228125},
    {2, 2.3263478740408411009, 2.3753296327788478169},
    {3, 3.0902323061678135415, 3.1152837746448989147},
    {5, 4.2648907939228246285, 4.2757518571194647458},
    {10, 6.3613409024040562047, 6.3649211392677911071},
    {30, 11.464024688443615727, 11.464671300178393176},
    {60, 16.397278212718710479, 16.397502128825967693},
    {100, 21.273453560965324295, 21.273556634343774206},
};

inline constexpr double kExactB3 = 0.43072729929545749021;
inline constexpr double kKConstant3 = 0.1688730485467980622;

}  // namespace normmax::reference
