#pragma once

// Built-in algebra presentations (.qalg sources) and the templated
// uh_slN(N)/classical_slN(N) families. Relations are stored exactly as the
// source displays give them; corrections live in the discrepancy ledger.

#include <sstream>
#include <vector>

#include "presentation.hpp"

namespace qjord {
namespace builtin_text {

inline const char* ohn_sl2 = R"qalg(algebra ohn_sl2;
source "Jordanian U_h(sl(2)) in the nonlinear basis (H, X, Y; T = exp(h X))";
generator H even;
generator X even;
generator Y even;
generator T even inverse Tinv;
relation hx: [H, X] - h^-1*T + h^-1*Tinv;
relation hy: [H, Y] + 1/2*Y*(T + Tinv) + 1/2*(T + Tinv)*Y;
relation xy: [X, Y] - H;
coproduct X = X (x) 1 + 1 (x) X;
coproduct Y = Y (x) T + Tinv (x) Y;
coproduct H = H (x) T + Tinv (x) H;
antipode X = -X;
antipode Y = -T*Y*Tinv;
antipode H = -T*H*Tinv;
counit X = 0;
counit Y = 0;
counit H = 0;
)qalg";

inline const char* uh_sl3 = R"qalg(algebra uh_sl3;
source "Jordanian U_h(sl(3)), full generator set with the long root T";
generator H1 even;
generator H2 even;
generator H3 even;
generator E1 even;
generator E2 even;
generator T even inverse Tinv;
generator F1 even;
generator F2 even;
generator F3 even;
relation h1h2: [H1, H2];
relation h1_tinvh3: [H1, Tinv*H3];
relation h2_tinvh3: [H2, Tinv*H3];
relation h1e1: [H1, E1] - 2*E1;
relation h2e2: [H2, E2] - 2*E2;
relation h1e2: [H1, E2] + E2;
relation h2e1: [H2, E1] + E1;
relation tinvh3e1: [Tinv*H3, E1] - E1;
relation tinvh3e2: [Tinv*H3, E2] - E2;
relation h1f1: [H1, F1] + 2*F1 - h*E2*Tinv*H3;
relation h2f2: [H2, F2] + 2*F2 + h*E1*Tinv*H3;
relation h1f2: [H1, F2] - F2 + h*E1*Tinv*H3;
relation h2f1: [H2, F1] - F1 - h*E2*Tinv*H3;
relation th3f1: [T*H3, F1] + T^2*F1;
relation th3f2: [T*H3, F2] + T^2*F2;
relation tinve1f1: [Tinv*E1, F1] - 1/2*(T + Tinv)*H1 - 1/2*(T - Tinv)*H2;
relation tinve2f2: [Tinv*E2, F2] - 1/2*(T + Tinv)*H2 - 1/2*(T - Tinv)*H1;
relation tinve1f2: [Tinv*E1, F2];
relation tinve2f1: [Tinv*E2, F1];
relation e1e2: [E1, E2] - 1/2*h^-1*(T^2 - 1);
relation tf2tf1: [T*F2, T*F1] - T*(F3 - 1/2*h*H3*T*H3 - 1/8*h*(T - Tinv));
relation th1t: [T*H1, T] - 1/2*(T^2 - 1);
relation th1tinv: [T*H1, Tinv] - 1/2*(Tinv^2 - 1);
relation th2t: [T*H2, T] - 1/2*(T^2 - 1);
relation th2tinv: [T*H2, Tinv] - 1/2*(Tinv^2 - 1);
relation h1f3: [H1, F3] + 1/4*Tinv*(T*F3 + F3*T + Tinv*F3 + F3*Tinv) + 1/4*h*Tinv*H3^2 + 1/4*h*H3*Tinv*H3;
relation h2f3: [H2, F3] + 1/4*Tinv*(T*F3 + F3*T + Tinv*F3 + F3*Tinv) + 1/4*h*Tinv*H3^2 + 1/4*h*H3*Tinv*H3;
relation e1t: [E1, T];
relation e1tinv: [E1, Tinv];
relation e2t: [E2, T];
relation e2tinv: [E2, Tinv];
relation f1t: [F1, T] - h*T*E2;
relation f1tinv: [F1, Tinv] + h*Tinv*E2;
relation f2t: [F2, T] + h*T*E1;
relation f2tinv: [F2, Tinv] - h*Tinv*E1;
relation e1f3: [E1, F3] + 1/2*(T*F2 + F2*T);
relation e2f3: [E2, F3] - 1/2*(T*F1 + F1*T);
relation f1f3: [F1, F3] - h*T*F1 + h*E2*F3 - 1/4*h^2*T*E2;
relation f2f3: [F2, F3] - h*T*F2 - h*E1*F3 + 1/4*h^2*T*E1;
coproduct E1 = E1 (x) 1 + T (x) E1;
coproduct E2 = E2 (x) 1 + T (x) E2;
coproduct F1 = F1 (x) 1 + Tinv (x) F1 + h*H3 (x) E2;
coproduct F2 = F2 (x) 1 + Tinv (x) F2 - h*H3 (x) E1;
coproduct F3 = F3 (x) T + Tinv (x) F3;
coproduct H1 = H1 (x) 1 + 1 (x) H1 - 1/2*(1 - Tinv^2) (x) Tinv*H3;
coproduct H2 = H2 (x) 1 + 1 (x) H2 - 1/2*(1 - Tinv^2) (x) Tinv*H3;
coproduct H3 = H3 (x) T + Tinv (x) H3;
antipode E1 = -Tinv*E1;
antipode E2 = -Tinv*E2;
antipode F1 = -T*F1 + h*T*H3*Tinv*E2;
antipode F2 = -T*F2 - h*T*H3*Tinv*E1;
antipode F3 = -T*F3*Tinv;
antipode H1 = -H1 - 1/2*(T - Tinv)*H3;
antipode H2 = -H2 - 1/2*(T - Tinv)*H3;
antipode H3 = -T*H3*Tinv;
counit E1 = 0;
counit E2 = 0;
counit F1 = 0;
counit F2 = 0;
counit F3 = 0;
counit H1 = 0;
counit H2 = 0;
counit H3 = 0;
)qalg";

inline const char* uh_sl3_chevalley = R"qalg(algebra uh_sl3_chevalley;
source "Jordanian U_h(sl(3)) in Chevalley form; T^2 = 1 + 2h[E1,E2]";
generator H1 even;
generator H2 even;
generator E1 even;
generator E2 even;
generator F1 even;
generator F2 even;
generator T even inverse Tinv;
relation tdef: T^2 - 1 - 2*h*[E1, E2];
relation tinvdef: Tinv^2*(1 + 2*h*[E1, E2]) - 1;
relation h1h2: [H1, H2];
relation h1e1: [H1, E1] - 2*E1;
relation h2e2: [H2, E2] - 2*E2;
relation h1e2: [H1, E2] + E2;
relation h2e1: [H2, E1] + E1;
relation h1f1: [H1, F1] + 2*F1 - h*E2*(H1 + H2);
relation h2f2: [H2, F2] + 2*F2 + h*E1*(H1 + H2);
relation h1f2: [H1, F2] - F2 + h*E1*(H1 + H2);
relation h2f1: [H2, F1] - F1 - h*E2*(H1 + H2);
relation tinve1f1: [Tinv*E1, F1] - 1/2*(T + Tinv)*H1 - 1/2*(T - Tinv)*H2;
relation tinve2f2: [Tinv*E2, F2] - 1/2*(T + Tinv)*H2 - 1/2*(T - Tinv)*H1;
relation tinve1f2: [Tinv*E1, F2];
relation tinve2f1: [Tinv*E2, F1];
relation serree1: E1^2*E2 - 2*E1*E2*E1 + E2*E1^2;
relation serree2: E2^2*E1 - 2*E2*E1*E2 + E1*E2^2;
relation serretf1: (T*F1)^2*(T*F2) - 2*(T*F1)*(T*F2)*(T*F1) + (T*F2)*(T*F1)^2;
relation serretf2: (T*F2)^2*(T*F1) - 2*(T*F2)*(T*F1)*(T*F2) + (T*F1)*(T*F2)^2;
)qalg";

inline const char* uq_osp12 = R"qalg(algebra uq_osp12;
source "standard q-deformation U_q(osp(1|2)); K = q^(H/2)";
generator H even;
generator E odd;
generator F odd;
generator K even inverse Kinv;
relation he: [H, E] - E;
relation hf: [H, F] + F;
relation ef: {E, F} + (K^2 - Kinv^2)/(q - q^-1);
relation kh: [K, H];
relation ke: K*E - q^(1/2)*E*K;
relation kf: K*F - q^(-1/2)*F*K;
coproduct H = H (x) 1 + 1 (x) H;
coproduct E = E (x) Kinv + K (x) E;
coproduct F = F (x) Kinv + K (x) F;
antipode H = -H;
antipode E = -q^(-1/2)*E;
antipode F = -q^(1/2)*F;
counit H = 0;
counit E = 0;
counit F = 0;
)qalg";

inline const char* uh_osp12_super = R"qalg(algebra uh_osp12_super;
source "super-Jordanian U_h(osp(1|2)) (nonlinear basis)";
generator H even;
generator E odd;
generator F odd;
generator Y even;
generator T even inverse Tinv;
generator Thalf even inverse Thalfinv;
relation he: [H, E] - 1/2*(T + Tinv)*E;
relation hf: [H, F] + 1/4*(T + Tinv)*F + 1/4*F*(T + Tinv);
relation ef: {E, F} + H;
relation ht: [H, T] - T^2 + 1;
relation htinv: [H, Tinv] - Tinv^2 + 1;
relation hy: [H, Y] + 1/2*(T + Tinv)*Y + 1/2*Y*(T + Tinv) + 1/4*h*E*(T - Tinv)*F + 1/4*h*F*(T - Tinv)*E;
relation ty: [T, Y] - 1/2*h*(T*H + H*T);
relation tinvy: [Tinv, Y] + 1/2*h*(Tinv*H + H*Tinv);
relation esq: E^2 - 1/2*h^-1*(T - Tinv);
relation fsq: F^2 + Y;
relation tf: [T, F] - h*T*E;
relation tinvf: [Tinv, F] + h*Tinv*E;
relation ye: [Y, E] - 1/4*(T + Tinv)*F - 1/4*F*(T + Tinv);
coproduct H = H (x) Tinv + T (x) H + h*E*Thalf (x) E*Thalfinv;
coproduct E = E (x) Thalfinv + Thalf (x) E;
coproduct F = F (x) Thalfinv + Thalf (x) F;
coproduct Y = Y (x) Tinv + T (x) Y + 1/2*h*E*Thalf (x) Thalfinv*F + 1/2*h*Thalf*F (x) E*Thalfinv;
antipode H = -H - h*E^2;
antipode E = -E;
antipode F = -F + 1/2*h*E;
antipode Y = -Y + 1/2*h*H + 1/4*h^2*E^2;
counit H = 0;
counit E = 0;
counit F = 0;
counit Y = 0;
)qalg";

inline const char* uh_osp12_jordanian = R"qalg(algebra uh_osp12_jordanian;
source "Jordanian U_h(osp(1|2)) (nonlinear basis; X primitive, T = exp(h X))";
generator H even;
generator E odd;
generator F odd;
generator X even;
generator Y even;
generator T even inverse Tinv;
generator Thalf even inverse Thalfinv;
relation he: [H, E] - 1/2*(T + Tinv)*E;
relation hf: [H, F] + 1/4*(T + Tinv)*F + 1/4*F*(T + Tinv) + 1/8*h*((T - Tinv)*H + H*(T - Tinv))*E + 1/8*h*E*((T - Tinv)*H + H*(T - Tinv));
relation ef: {E, F} + 1/4*(T + Tinv)*H + 1/4*H*(T + Tinv);
relation ht: [H, T] - T^2 + 1;
relation htinv: [H, Tinv] - Tinv^2 + 1;
relation hy: [H, Y] + 1/2*(T + Tinv)*Y + 1/2*Y*(T + Tinv);
relation ty: [T, Y] - 1/2*h*(T*H + H*T);
relation tinvy: [Tinv, Y] + 1/2*h*(Tinv*H + H*Tinv);
relation esq: E^2 - 1/2*h^-1*(T - Tinv);
relation ye: [Y, E] - F;
relation tf: [T, F] - 1/2*h*(T^2 + 1)*E;
relation tinvf: [Tinv, F] + 1/2*h*(Tinv^2 + 1)*E;
relation fsq: F^2 + Y - 1/8*h*(T - Tinv)*H^2 - 1/4*h*(T - Tinv)*E*F - 3/16*h*(T^2 - Tinv^2)*H - 1/4*h*(T - Tinv) - 9/128*h*(T - Tinv)^3;
relation fy: [F, Y] - 1/4*h*(T - Tinv)*F - 1/2*h*(T - Tinv)*E*Y + 1/4*h^2*E*H^2 + 3/8*h^2*(T + Tinv)*E*H + 1/2*h^2*E + 15/64*h^2*(T - Tinv)^2*E;
coproduct H = H (x) T + Tinv (x) H;
coproduct E = E (x) Thalfinv + Thalf (x) E;
coproduct F = F (x) Thalf + Thalfinv (x) F + 1/4*h*Tinv*E (x) (Thalfinv*H + H*Thalfinv) - 1/4*h*(Thalf*H + H*Thalf) (x) T*E;
coproduct X = X (x) 1 + 1 (x) X;
coproduct Y = Y (x) T + Tinv (x) Y;
antipode H = -H + 2*h*E^2;
antipode E = -E;
antipode F = -F - 1/2*h*(T + Tinv)*E;
antipode X = -X;
antipode Y = -Y - h*H + h^2*E^2;
counit H = 0;
counit E = 0;
counit F = 0;
counit X = 0;
counit Y = 0;
)qalg";

inline const char* classical_osp12 = R"qalg(algebra classical_osp12;
source "classical osp(1|2): three even (H, Bp, Bm), two odd (E, F)";
generator H even;
generator Bp even;
generator Bm even;
generator E odd;
generator F odd;
relation he: [H, E] - E;
relation hf: [H, F] + F;
relation ef: {E, F} + H;
relation hbp: [H, Bp] - 2*Bp;
relation hbm: [H, Bm] + 2*Bm;
relation bpbm: [Bp, Bm] - H;
relation bpf: [Bp, F] - E;
relation bme: [Bm, E] - F;
relation bpdef: E^2 - Bp;
relation bmdef: F^2 + Bm;
)qalg";

inline const char* classical_sl21 = R"qalg(algebra classical_sl21;
source "classical sl(2|1); the dependent Cartan h3 = H1 + H2 is expanded";
generator H1 even;
generator H2 even;
generator E1 even;
generator F1 even;
generator E2 odd;
generator F2 odd;
generator E3 odd;
generator F3 odd;
relation h1h2: [H1, H2];
relation h1e1: [H1, E1] - 2*E1;
relation h1f1: [H1, F1] + 2*F1;
relation h1e2: [H1, E2] + E2;
relation h1f2: [H1, F2] - F2;
relation h1e3: [H1, E3] - E3;
relation h1f3: [H1, F3] + F3;
relation h2e1: [H2, E1] + E1;
relation h2f1: [H2, F1] - F1;
relation h2e2: [H2, E2];
relation h2f2: [H2, F2];
relation h2e3: [H2, E3] + E3;
relation h2f3: [H2, F3] - F3;
relation h3e1: [H1 + H2, E1] - E1;
relation h3f1: [H1 + H2, F1] + F1;
relation h3e2: [H1 + H2, E2] + E2;
relation h3f2: [H1 + H2, F2] - F2;
relation h3e3: [H1 + H2, E3];
relation h3f3: [H1 + H2, F3];
relation e1f1: [E1, F1] - H1;
relation e2f2: [E2, F2] - H2;
relation e3f3: [E3, F3] - H1 - H2;
relation e1f2: [E1, F2];
relation e2f1: [E2, F1];
relation e2sq: E2^2;
relation f2sq: F2^2;
relation e1e2: [E1, E2] - E3;
relation f2f1: [F2, F1] - F3;
relation e3sq: E3^2;
relation f3sq: F3^2;
relation e1e3: [E1, E3];
relation f3f1: [F3, F1];
relation e2e3: [E2, E3];
relation f2f3: [F2, F3];
relation f1e3: [F1, E3] - E2;
relation f3e1: [F3, E1] - F2;
relation f2e3: [F2, E3] - E1;
relation f3e2: [F3, E2] - F1;
relation serree: E1^2*E2 - 2*E1*E2*E1 + E2*E1^2;
relation serref: F1^2*F2 - 2*F1*F2*F1 + F2*F1^2;
)qalg";

inline const char* uq_sl21 = R"qalg(algebra uq_sl21;
source "standard q-deformation U_q(sl(2|1)); Ki = q^(Hi/2)";
generator H1 even;
generator H2 even;
generator E1 even;
generator F1 even;
generator E2 odd;
generator F2 odd;
generator K1 even inverse K1inv;
generator K2 even inverse K2inv;
relation h1h2: [H1, H2];
relation h1e1: [H1, E1] - 2*E1;
relation h1f1: [H1, F1] + 2*F1;
relation h1e2: [H1, E2] + E2;
relation h1f2: [H1, F2] - F2;
relation h2e1: [H2, E1] + E1;
relation h2f1: [H2, F1] - F1;
relation h2e2: [H2, E2];
relation h2f2: [H2, F2];
relation e1f2: [E1, F2];
relation e2f1: [E2, F1];
relation e2sq: E2^2;
relation f2sq: F2^2;
relation serreqe: E1^2*E2 - (q + q^-1)*E1*E2*E1 + E2*E1^2;
relation serreqf: F1^2*F2 - (q + q^-1)*F1*F2*F1 + F2*F1^2;
relation k1e1: K1*E1 - q*E1*K1;
relation k1f1: K1*F1 - q^-1*F1*K1;
relation k1e2: K1*E2 - q^(-1/2)*E2*K1;
relation k1f2: K1*F2 - q^(1/2)*F2*K1;
relation k2e1: K2*E1 - q^(-1/2)*E1*K2;
relation k2f1: K2*F1 - q^(1/2)*F1*K2;
relation k2e2: [K2, E2];
relation k2f2: [K2, F2];
relation k1k2: [K1, K2];
coproduct H1 = H1 (x) 1 + 1 (x) H1;
coproduct H2 = H2 (x) 1 + 1 (x) H2;
coproduct E1 = E1 (x) K1 + K1inv (x) E1;
coproduct E2 = E2 (x) K2 + K2inv (x) E2;
coproduct F1 = F1 (x) K1 + K1inv (x) F1;
coproduct F2 = F2 (x) K2 + K2inv (x) F2;
counit H1 = 0;
counit H2 = 0;
counit E1 = 0;
counit E2 = 0;
counit F1 = 0;
counit F2 = 0;
)qalg";

inline const char* uh_sl21 = R"qalg(algebra uh_sl21;
source "super-Jordanian U_h(sl(2|1)) (nonlinear basis)";
generator T even inverse Tinv;
generator Thalf even inverse Thalfinv;
generator H1 even;
generator F1 even;
generator H2 even;
generator H3 even;
generator E2 odd;
generator F2 odd;
generator E3 odd;
generator F3 odd;
relation h1t: [H1, T] - T^2 + 1;
relation h1tinv: [H1, Tinv] - Tinv^2 + 1;
relation tf1: [T, F1] + 1/2*h*(H1*T + T*H1);
relation tinvf1: [Tinv, F1] + 1/2*h*(H1*Tinv + Tinv*H1);
relation h1f1: [H1, F1] + 1/2*(T*F1 + F1*T + Tinv*F1 + F1*Tinv);
relation h1h2: [H1, H2] + 1/4*(T - Tinv)*H1;
relation h1h3: [H1, H3] - 1/4*(T - Tinv)*H1;
relation h2h3: [H2, H3];
relation h1e2: [H1, E2] + 1/2*E2*(T + Tinv) + 1/4*h*(H1*(T - Tinv) + (T - Tinv)*H1)*E3;
relation h1f2: [H1, F2] - 1/2*(T + Tinv)*F2;
relation h1e3: [H1, E3] - 1/2*(T + Tinv)*E3;
relation h1f3: [H1, F3] - 1/2*F3*(T + Tinv) - 1/4*h*(H1*(T - Tinv) + (T - Tinv)*H1)*F2;
relation h2t: [H2, T] + 1/4*(T^3 - Tinv);
relation h2tinv: [H2, Tinv] + 1/4*(Tinv^3 - T);
relation h2f1: [H2, F1] - 1/4*(T + Tinv)^2*F1 + 1/4*h*(T - Tinv)*H1^2 + 1/4*h*(T^2 - Tinv^2)*H1 + 1/16*h*(T^2 - Tinv^2)*(T + Tinv);
relation h2e2: [H2, E2] - 1/16*h*(T - Tinv)*(T^2 - Tinv^2)*E3 - 1/8*(T - Tinv)^2*E2;
relation h2f2: [H2, F2] + 1/8*(T - Tinv)^2*F2;
relation h2e3: [H2, E3] + 1/8*(T^2 + 6 + Tinv^2)*E3;
relation h2f3: [H2, F3] - 1/8*(T^2 + 6 + Tinv^2)*F3 + 1/16*h*(T^2 - Tinv^2)*(T + Tinv)*F2;
relation h3t: [H3, T] - 1/4*(T^3 - Tinv);
relation h3tinv: [H3, Tinv] - 1/4*(Tinv^3 - T);
relation h3f1: [H3, F1] - 1/4*(T + Tinv)^2*F1 - 1/4*h*(T - Tinv)*H1^2 - 1/4*h*(T^2 - Tinv^2)*H1 - 1/16*h*(T^2 - Tinv^2)*(T + Tinv);
relation h3e2: [H3, E2] + 1/8*(T^2 + 6 + Tinv^2)*E2 + 1/16*h*(T^2 - Tinv^2)*(T + Tinv)*E3;
relation h3f2: [H3, F2] - 1/8*(T^2 + 6 + Tinv^2)*F2;
relation h3e3: [H3, E3] - 1/8*(T - Tinv)^2*E3;
relation h3f3: [H3, F3] - 1/16*h*(T - Tinv)*(T^2 - Tinv^2)*F2 + 1/8*(T - Tinv)^2*F3;
relation e2f2: [E2, F2] - H2 + 1/16*(T - Tinv)^2 + 1/4*h*(T - Tinv)*E3*F2;
relation e3f3: [E3, F3] - H3 - 1/16*(T - Tinv)^2 - 1/4*h*(T - Tinv)*F2*E3;
relation tf2: [T, F2];
relation tinvf2: [Tinv, F2];
relation e2f1: [E2, F1] - 1/4*h*(T - Tinv)*E2 - 1/2*h*(T - Tinv)*E3*F1 + 1/4*h^2*E3*H1^2 + 3/8*h^2*(T + Tinv)*E3*H1 + 1/2*h^2*E3 + 15/64*h^2*(T - Tinv)^2*E3;
relation e2sq: E2^2 - 1/4*h*(T - Tinv)*E3*E2;
relation f2sq: F2^2;
relation e3sq: E3^2;
relation f3sq: F3^2 + 1/4*h*(T - Tinv)*F2*F3;
relation te2: [T, E2] - 1/2*h*(T^2 + 1)*E3;
relation tinve2: [Tinv, E2] + 1/2*h*(Tinv^2 + 1)*E3;
relation f2f1: [F2, F1] - F3;
relation te3: [T, E3];
relation tinve3: [Tinv, E3];
relation f3f1: [F3, F1] - 1/4*h*(T - Tinv)*F3 + 1/2*h*(T - Tinv)*F2*F1 - 1/4*h^2*F2*H1^2 - 3/8*h^2*(T + Tinv)*F2*H1 - 1/2*h^2*F2 - 15/64*h^2*(T - Tinv)^2*F2;
relation e2e3: [E2, E3];
relation f2f3: [F2, F3];
relation f1e3: [F1, E3] - E2;
relation tf3: [T, F3] + 1/2*h*(T^2 + 1)*F2;
relation tinvf3: [Tinv, F3] - 1/2*h*(Tinv^2 + 1)*F2;
relation f2e3: [F2, E3] - 1/2*h^-1*(T - Tinv);
relation f3e2: [F3, E2] - F1 + 1/4*h*(T - Tinv)*F2*E2 - 1/4*h*(T - Tinv)*E3*F3 + 1/8*h*(T - Tinv)*H1^2 + 1/8*h*(T^2 - Tinv^2)*H1 + 1/16*h*H1*(T^2 - Tinv^2) + 7/128*h*(T - Tinv)^3;
coproduct H1 = H1 (x) T + Tinv (x) H1;
coproduct F1 = F1 (x) T + Tinv (x) F1;
coproduct E2 = E2 (x) Thalf + Thalfinv (x) E2 + 1/4*h*Tinv*E3 (x) (Thalfinv*H1 + H1*Thalfinv) - 1/4*h*(Thalf*H1 + H1*Thalf) (x) T*E3;
coproduct F2 = F2 (x) Thalfinv + Thalf (x) F2;
coproduct E3 = E3 (x) Thalfinv + Thalf (x) E3;
coproduct F3 = F3 (x) Thalf + Thalfinv (x) F3 - 1/4*h*Tinv*F2 (x) (Thalfinv*H1 + H1*Thalfinv) + 1/4*h*(Thalf*H1 + H1*Thalf) (x) T*F2;
coproduct H2 = H2 (x) 1 + 1 (x) H2 + 1/4*T*H1 (x) (1 - T^2) + 1/4*(1 - Tinv^2) (x) Tinv*H1;
coproduct H3 = H2 (x) 1 + 1 (x) H2 - 1/4*T*H1 (x) (1 - T^2) - 1/4*(1 - Tinv^2) (x) Tinv*H1;
antipode H1 = -T*H1*Tinv;
antipode F1 = -T*F1*Tinv;
antipode E2 = -E2 - 1/2*h*(T + Tinv)*E3;
antipode F2 = -F2;
antipode E3 = -E3;
antipode F3 = -F3 + 1/2*h*(T + Tinv)*E3;
antipode H2 = -H2 + 1/2*(Tinv^2 - 1);
antipode H3 = -H3 - 1/2*(Tinv^2 - 1);
counit H1 = 0;
counit F1 = 0;
counit H2 = 0;
counit H3 = 0;
counit E2 = 0;
counit F2 = 0;
counit E3 = 0;
counit F3 = 0;
)qalg";

}  // namespace builtin_text

// ---- templated families ---------------------------------------------------

namespace detail_builtin {

inline int cartan(int N, int i, int j) {  // 1-based
    if (i == j) return 2;
    if (i == j + 1 || j == i + 1) return -1;
    return 0;
}

inline std::string classical_slN_text(int N) {
    std::ostringstream os;
    os << "algebra classical_slN_" << N << ";\n";
    os << "source \"classical sl(" << N << ") in Chevalley generators\";\n";
    for (int i = 1; i < N; ++i)
        os << "generator H" << i << " even;\ngenerator E" << i
           << " even;\ngenerator F" << i << " even;\n";
    for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
            if (j > i) os << "relation h" << i << "h" << j << ": [H" << i << ", H" << j << "];\n";
            const int a = cartan(N, i, j);
            os << "relation h" << i << "e" << j << ": [H" << i << ", E" << j << "]"
               << (a ? (a > 0 ? " - " : " + ") + std::to_string(std::abs(a)) + "*E" + std::to_string(j) : "")
               << ";\n";
            os << "relation h" << i << "f" << j << ": [H" << i << ", F" << j << "]"
               << (a ? (a > 0 ? " + " : " - ") + std::to_string(std::abs(a)) + "*F" + std::to_string(j) : "")
               << ";\n";
            os << "relation e" << i << "f" << j << ": [E" << i << ", F" << j << "]"
               << (i == j ? " - H" + std::to_string(i) : "") << ";\n";
            if (j > i + 1) {
                os << "relation e" << i << "e" << j << ": [E" << i << ", E" << j << "];\n";
                os << "relation f" << i << "f" << j << ": [F" << i << ", F" << j << "];\n";
            }
            if (std::abs(i - j) == 1) {
                os << "relation serre_e" << i << "_" << j << ": E" << i << "^2*E" << j
                   << " - 2*E" << i << "*E" << j << "*E" << i << " + E" << j << "*E" << i << "^2;\n";
                os << "relation serre_f" << i << "_" << j << ": F" << i << "^2*F" << j
                   << " - 2*F" << i << "*F" << j << "*F" << i << " + F" << j << "*F" << i << "^2;\n";
            }
        }
    return os.str();
}

// Jordanian U_h(sl(N)) (Chevalley basis with the long-root T)
inline std::string uh_slN_text(int N) {
    auto S = [](int k) { return std::to_string(k); };
    auto delta = [&](int i) { return (i == 1 ? 1 : 0) + (i == N - 1 ? 1 : 0); };
    auto Tpow = [&](int k) -> std::string {
        if (k == 0) return "1";
        std::string base = k > 0 ? "T" : "Tinv";
        int a = std::abs(k);
        return a == 1 ? base : base + "^" + S(a);
    };
    std::string hsum = "(H1";
    for (int i = 2; i < N; ++i) hsum += " + H" + S(i);
    hsum += ")";
    std::ostringstream os;
    os << "algebra uh_slN_" << N << ";\n";
    os << "source \"Jordanian U_h(sl(" << N << ")) in Chevalley form with long-root T\";\n";
    os << "generator T even inverse Tinv;\n";
    for (int i = 1; i < N; ++i)
        os << "generator H" << i << " even;\ngenerator E" << i
           << " even;\ngenerator F" << i << " even;\n";
    for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
            const int a = cartan(N, i, j);
            if (j > i) os << "relation h" << i << "h" << j << ": [H" << i << ", H" << j << "];\n";
            os << "relation h" << i << "e" << j << ": [H" << i << ", E" << j << "]"
               << (a ? (a > 0 ? " - " : " + ") + S(std::abs(a)) + "*E" + S(j) : "") << ";\n";
            // [H_i,F_j] = -a_ij F_j + delta_i T^-1 [F_j, T] (sum H)
            os << "relation h" << i << "f" << j << ": [H" << i << ", F" << j << "]";
            if (a) os << (a > 0 ? " + " : " - ") << std::abs(a) << "*F" << S(j);
            if (delta(i))
                os << " - " << delta(i) << "*Tinv*[F" << j << ", T]*" << hsum;
            os << ";\n";
            // [T^{-delta_i} E_i, F_j] = delta_ij (T^{-delta_i} H_i + (delta_i/2)(T - Tinv) sum H)
            os << "relation te" << i << "f" << j << ": [" << (delta(i) ? Tpow(-delta(i)) + "*" : "")
               << "E" << i << ", F" << j << "]";
            if (i == j) {
                os << " - " << (delta(i) ? Tpow(-delta(i)) + "*" : "") << "H" << i;
                if (delta(i)) {
                    if (delta(i) == 1) os << " - 1/2*(T - Tinv)*" << hsum;
                    else os << " - (T - Tinv)*" << hsum;
                }
            }
            os << ";\n";
            if (j > i + 1) {
                os << "relation e" << i << "e" << j << ": [E" << i << ", E" << j << "];\n";
                os << "relation tf" << i << "tf" << j << ": ["
                   << (delta(i) ? Tpow(delta(i)) + "*" : "") << "F" << i << ", "
                   << (delta(j) ? Tpow(delta(j)) + "*" : "") << "F" << j << "];\n";
            }
            if (std::abs(i - j) == 1) {
                os << "relation serre_e" << i << "_" << j << ": E" << i << "^2*E" << j
                   << " - 2*E" << i << "*E" << j << "*E" << i << " + E" << j << "*E" << i << "^2;\n";
                const std::string A = delta(i) ? "(" + Tpow(delta(i)) + "*F" + S(i) + ")"
                                               : "F" + S(i);
                const std::string B = delta(j) ? "(" + Tpow(delta(j)) + "*F" + S(j) + ")"
                                               : "F" + S(j);
                os << "relation serre_tf" << i << "_" << j << ": " << A << "^2*" << B
                   << " - 2*" << A << "*" << B << "*" << A << " + " << B << "*" << A << "^2;\n";
            }
        }
    // coalgebra
    for (int i = 1; i < N; ++i) {
        const int d = delta(i);
        os << "coproduct E" << i << " = E" << i << " (x) 1 + " << Tpow(d) << " (x) E" << i << ";\n";
        os << "coproduct F" << i << " = F" << i << " (x) 1 + " << Tpow(-d) << " (x) F" << i
           << " + T*" << hsum << " (x) Tinv*[F" << i << ", T];\n";
        os << "coproduct H" << i << " = H" << i << " (x) 1 + 1 (x) H" << i;
        if (d == 1) os << " - 1/2*(1 - Tinv^2) (x) " << hsum;
        else if (d == 2) os << " - (1 - Tinv^2) (x) " << hsum;
        os << ";\n";
    }
    for (int i = 1; i < N; ++i) {
        const int d = delta(i);
        os << "antipode E" << i << " = -" << Tpow(-d) << "*E" << i << ";\n";
        os << "antipode F" << i << " = -" << Tpow(d) << "*F" << i
           << " + T^2*" << hsum << "*Tinv^2*[F" << i << ", T];\n";
        os << "antipode H" << i << " = -H" << i;
        if (d == 1) os << " + 1/2*(1 - T^2)*" << hsum;
        else if (d == 2) os << " + (1 - T^2)*" << hsum;
        os << ";\n";
    }
    for (int i = 1; i < N; ++i)
        os << "counit E" << i << " = 0;\ncounit F" << i << " = 0;\ncounit H" << i << " = 0;\n";
    return os.str();
}

}  // namespace detail_builtin

// builtin source text by name; templated names: uh_slN_<n>, classical_slN_<n>;
// "uh_slN(4)" style aliases accepted
inline std::string builtin_source(const std::string& name_in) {
    std::string name = name_in;
    auto paren = [&](const std::string& stem) -> int {
        if (name.rfind(stem + "(", 0) == 0 && name.back() == ')')
            return std::stoi(name.substr(stem.size() + 1,
                                         name.size() - stem.size() - 2));
        return -1;
    };
    if (int n = paren("uh_slN"); n > 0) name = "uh_slN_" + std::to_string(n);
    if (int n = paren("classical_slN"); n > 0) name = "classical_slN_" + std::to_string(n);

    if (name == "ohn_sl2") return builtin_text::ohn_sl2;
    if (name == "uh_sl3") return builtin_text::uh_sl3;
    if (name == "uh_sl3_chevalley") return builtin_text::uh_sl3_chevalley;
    if (name == "uq_osp12") return builtin_text::uq_osp12;
    if (name == "uh_osp12_super") return builtin_text::uh_osp12_super;
    if (name == "uh_osp12_jordanian") return builtin_text::uh_osp12_jordanian;
    if (name == "classical_osp12") return builtin_text::classical_osp12;
    if (name == "classical_sl21") return builtin_text::classical_sl21;
    if (name == "uq_sl21") return builtin_text::uq_sl21;
    if (name == "uh_sl21") return builtin_text::uh_sl21;
    if (name.rfind("uh_slN_", 0) == 0) {
        const int n = std::stoi(name.substr(7));
        if (n >= 2 && n <= 6) return detail_builtin::uh_slN_text(n);
    }
    if (name.rfind("classical_slN_", 0) == 0) {
        const int n = std::stoi(name.substr(14));
        if (n >= 2 && n <= 6) return detail_builtin::classical_slN_text(n);
    }
    throw UnknownPresentation("unknown builtin presentation: " + name_in);
}

inline AlgebraPresentation builtin(const std::string& name) {
    return parse_presentation(builtin_source(name));
}

inline std::vector<std::string> builtin_names() {
    return {"ohn_sl2",       "uh_sl3",          "uh_sl3_chevalley", "uh_slN_2",
            "uh_slN_3",      "uh_slN_4",        "uh_slN_5",         "uq_osp12",
            "uh_osp12_super", "uh_osp12_jordanian", "classical_osp12",
            "classical_sl21", "classical_slN_2", "classical_slN_3",  "uq_sl21",
            "uh_sl21"};
}

}  // namespace qjord
