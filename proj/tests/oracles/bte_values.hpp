// Generated by tests/oracles/gen_bte.py (mpmath, 30 digits). Do not edit.
#pragma once
#include <complex>

namespace oracle {

struct BteCase { int d, n; std::complex<double> k; std::complex<double> b; };
inline const BteCase kBte[] = {
  {2, 0, {5.0e-1, 0.0}, {1.4291958289683163869, 0.0}},
  {2, 0, {3.0, 1.0}, {3.536058317465570033e-1, -9.8282523404471483124e-2}},
  {2, 1, {2.0, -5.0e-1}, {3.3733328712112818237e-1, -5.9025220611498966554e-2}},
  {2, 3, {2.0, 1.0}, {-7.8498646040000127092e-3, 7.468485642573128978e-3}},
  {2, 5, {1.0e+1, 3.0}, {-1.3149872579564950016e-1, 2.9557973533600211541e-1}},
  {2, 2, {7.25, -6.0}, {2.0494056772548058362e+2, 1.1268615524613899647e+2}},
  {2, 10, {4.0, 2.0}, {-2.8425663594440062755e-8, 3.1005095950673840664e-8}},
  {2, 20, {1.5e+1, -1.0}, {-1.2930635375543666548e-6, -3.8790800803820073106e-6}},
  {2, 5, {4.0e+1, 5.0e-1}, {3.0066977042440034462e-2, -6.9945593729539701473e-5}},
  {2, 0, {0.0, 6.0}, {7.9712684604171334916e+2, 0.0}},
  {2, 3, {3.5e+1, -7.5}, {1.125221810011648546e+1, 3.8859949993643539213e+2}},
  {3, 0, {5.0e-1, 0.0}, {2.2490757508571113552, 0.0}},
  {3, 0, {3.0, 1.0}, {6.2746575217663789779e-1, -3.7759734298966552061e-1}},
  {3, 1, {2.0, -5.0e-1}, {2.904745226628886523e-1, -6.701063421407588851e-2}},
  {3, 3, {2.0, 1.0}, {-3.2999578879285118207e-3, 2.8892573645947160005e-3}},
  {3, 5, {1.0e+1, 3.0}, {-7.293499559431212134e-2, 1.3266322460292746537e-2}},
  {3, 2, {7.25, -6.0}, {6.738813227931118855e+1, -1.2890281379984190339e+1}},
  {3, 10, {4.0, 2.0}, {-4.2733983140470540388e-9, 4.3968832702557340769e-9}},
  {3, 20, {1.5e+1, -1.0}, {-1.1836566300564992797e-7, -3.3036883216065021921e-7}},
  {3, 5, {4.0e+1, 5.0e-1}, {5.2151530393502645634e-3, -6.6680379025180652265e-5}},
  {3, 0, {0.0, 6.0}, {4.1825914377996229283e+2, 0.0}},
  {3, 3, {3.5e+1, -7.5}, {3.2431879089027280179e+1, 8.8060148144853152276}},
};

struct ZeroCase { int d, n; std::complex<double> k; };
inline const ZeroCase kZeros[] = {
  {2, 0, {2.894524055076508132, -1.7296272493330976235}},
  {2, 1, {4.4121231378821868511, 1.7156060807994835873}},
};

struct MellinCase { std::complex<double> z; double nu; std::complex<double> m; };
inline const MellinCase kMellinJ2[] = {
  {{5.0e-1, 0.0}, 1.0, {8.2312989008935857551e-1, 0.0}},
  {{5.0e-1, 3.0}, 0.0, {1.0567613854756538093e-1, -1.5903436498214287876e-1}},
  {{2.999999999999999889e-1, 4.0e+1}, 2.0, {2.2814969816650848013e-3, -7.3762747442536108107e-3}},
  {{6.9999999999999995559e-1, -2.0e+2}, 5.0e-1, {4.8210241557624805114e-3, -5.1930324157359908244e-3}},
  {{-3.2000000000000001776, 1.0}, 2.5, {5.379584459344935925e-3, 3.4878283058621892098e-3}},
  {{9.000000000000000222e-1, 0.0}, 0.0, {4.1387444579814661545, 0.0}},
  {{1.0000000000000000555e-1, -1.0e+1}, 7.0, {-9.3644726138924139822e-3, -1.5594696127293513521e-2}},
};

inline constexpr double kMellinJ1SqHalfDirect = 8.2312990628854309844e-1;

struct ParsevalCase { int d; double xi, nu, eps, value; };
inline const ParsevalCase kParseval[] = {
  {2, 5.0, 0.0, 5.0e-1, 7.2641070808687032086e-2},
  {2, 5.0, 1.0, 5.0e-1, 6.3519413289800612769e-2},
  {2, 5.0, 3.0, 5.0e-1, 9.0907685711693232861e-2},
  {2, 1.0e+1, 0.0, 5.0e-1, 3.1963349722549406887e-2},
  {2, 1.0e+1, 1.0, 5.0e-1, 3.798269858160625635e-2},
  {2, 1.0e+1, 3.0, 5.0e-1, 3.6046457010834298069e-2},
  {2, 2.0e+1, 0.0, 5.0e-1, 1.8105930195089099083e-2},
  {2, 2.0e+1, 1.0, 5.0e-1, 1.6951204952306873634e-2},
  {2, 2.0e+1, 3.0, 5.0e-1, 1.7913510858398880547e-2},
  {3, 5.0, 0.0, 5.0e-1, 8.2997924254268860497e-2},
  {3, 5.0, 1.0, 5.0e-1, 8.0107293003733435696e-2},
  {3, 5.0, 3.0, 5.0e-1, 1.1020516167853631343e-1},
  {3, 1.0e+1, 0.0, 5.0e-1, 3.6543389331910598394e-2},
  {3, 1.0e+1, 1.0, 5.0e-1, 4.8289351141834109873e-2},
  {3, 1.0e+1, 3.0, 5.0e-1, 4.3026346794225216084e-2},
  {3, 2.0e+1, 0.0, 5.0e-1, 2.219113327093208091e-2},
  {3, 2.0e+1, 1.0, 5.0e-1, 2.0406518217649707589e-2},
  {3, 2.0e+1, 3.0, 5.0e-1, 2.2112951464419208932e-2},
};

struct AiryTailCase { double a, tail; };
inline const AiryTailCase kAiryTail[] = {
  {-2.0, 4.8567249353108431384e-1},
  {0.0, 6.6987483779663974144e-2},
  {1.0, 7.0238701595382203773e-3},
  {3.0, 1.1589659908135621807e-5},
};

inline constexpr double kComparableD3L2 = 1.3985840750068168779;

inline constexpr double kReducedN60K10 = 7.3305400161105620763e-3;

}  // namespace oracle
