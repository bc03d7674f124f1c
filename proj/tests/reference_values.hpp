// Generated by tests/oracles/reference_values.py (mpmath, 40 digits).
#ifndef GLK_TESTS_REFERENCE_VALUES_HPP
#define GLK_TESTS_REFERENCE_VALUES_HPP

namespace glk::testref {

inline constexpr double log_a = 0.24875447703378426255;
inline constexpr double glaisher_a = 1.2824271291006226369;
inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double catalan = 0.91596559417721901505;
inline constexpr double lemniscate = 2.6220575542921198105;
inline constexpr double half_log_2pi = 0.91893853320467274178;
inline constexpr double log_gamma_three_halves = -0.12078223763524522235;
inline constexpr double eq9_integral = -0.082710571850225464607;
inline constexpr double eq10_integral = 0.39021437091470435117;
inline constexpr double eq11_integral = -0.34282992520232755645;
inline constexpr double eq12_integral = -0.042853740650290944557;
inline constexpr double eq28_integral = 0.61294730049539893841;
inline constexpr double eq33_integral = -1.2258946009907978768;
inline constexpr double loggamma_half_integral = -0.042853740650290944557;
inline constexpr double stirling_part_integral = -0.23796092610764312014;
inline constexpr double inner_arctan_at_pi = 0.56598587683871048216;
inline constexpr double mu_0p25 = 0.27251040121343206088;
inline constexpr double mu_0p5 = 0.15342640972002734529;
inline constexpr double mu_1 = 0.08106146679532725822;
inline constexpr double mu_2 = 0.041340695955409294094;
inline constexpr double mu_5 = 0.016644691189821192163;
inline constexpr double mu_10 = 8.3305634333628712565e-3;
inline constexpr double mu_50 = 1.6666444469833655099e-3;
inline constexpr double nu_0p5 = 0.72963715453852182998;
inline constexpr double nu_1 = 0.42278433509846713939;
inline constexpr double nu_2 = 0.22963715453852182998;
inline constexpr double stieltjes_1_1 = -0.072815845483676724861;
inline constexpr double stieltjes_0_half = 1.9635100260214234794;
inline constexpr double stieltjes_2_1 = -9.6903631928723184845e-3;
inline constexpr double stieltjes_3_half = -0.66742427371138073956;
inline constexpr double prime_sum_target = 0.5699609930945328064;
inline constexpr double barnes_g_half = 0.60324428120944620619;
inline constexpr double barnes_g_quarter = 0.29375596533860995472;
inline constexpr double barnes_seq_2_deviation = 9.880187821230640631e-4;
inline constexpr double barnes_seq_5_deviation = 1.6512157704650110384e-4;
inline constexpr double barnes_seq_10_deviation = 4.1568145496490179111e-5;
inline constexpr double barnes_seq_20_deviation = 1.0410477083749018452e-5;
inline constexpr double barnes_seq_40_deviation = 2.6037793112628846948e-6;
inline constexpr double barnes_seq_50_deviation = 1.6665079809281600988e-6;
inline constexpr double barnes_seq_2000_deviation = 1.0416666046627092634e-9;

} // namespace glk::testref

#endif // GLK_TESTS_REFERENCE_VALUES_HPP
