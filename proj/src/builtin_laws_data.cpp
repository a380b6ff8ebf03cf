#include "mkpkit/laws.hpp"

namespace mkpkit::detail {

// Reviewed transcription of the four low-order multipliers and the four
// topological conservation laws of the scaled mKP family in potential form.
// s1, s2 are the concrete signs, k the (exact) kappa, w[a,b,c] the jet
// variable with a t-, b x-, c y-derivatives. Edits here invalidate the
// pinned checksum below, which the loader re-verifies before any cached
// verification result may be trusted.
const char* const kBuiltinLawData = R"DATA(
@Q1
f1
@Q2
k*w[0,1,0]*f2 + y*f2'
@Q3
(4*y*w[0,1,0] - 2*k*s2*x)*f3 + k*y^2*f3'
@Q4
-(k*s1*w[0,3,0] + 1/3*k*w[0,1,0]^3 - s1*w[0,1,0]*w[0,0,1] - 1/4*k*s1*w[1,0,0])*f4
 + (1/4*k*s1*x*w[0,1,0])*f4'
 + (1/8*k*y^2*w[0,1,0] + 1/4*s1*x*y)*f4''
 + 1/24*y^3*f4'''
@X1
f1*(w[0,3,0] + k*w[0,1,0]*w[0,0,1] + 1/3*s1*w[0,1,0]^3 + w[1,0,0])
@Y1
f1*(s2*w[0,0,1] - 1/2*k*w[0,1,0]^2)
@X2
f2*((-w[1,3,0] - (s1*w[0,1,0]^2 + k*w[0,0,1])*w[1,1,0] - k*w[0,1,0]*w[1,0,1] - w[2,0,0])*y
 + k*w[0,1,0]*w[0,3,0] - 1/2*k*w[0,2,0]^2
 + 1/4*k*s1*w[0,1,0]^4 + 1/2*k^2*w[0,1,0]^2*w[0,0,1] - 1/2*k*s2*w[0,0,1]^2)
@Y2
f2*((k*w[0,1,0]*w[1,1,0] - s2*w[1,0,1])*y - 1/6*k^2*w[0,1,0]^3 + k*s2*w[0,1,0]*w[0,0,1] + s2*w[1,0,0])
@X3
f3*((w[0,3,0] + 1/3*s1*w[0,1,0]^3 + k*w[0,0,1]*w[0,1,0] + w[1,0,0])*x
 - 1/2*(s1*w[1,3,0] + (w[0,1,0]^2 + k*s1*w[0,0,1])*w[1,1,0] + s1*w[2,0,0] + s1*k*w[0,1,0]*w[1,0,1])*y^2
 + (s1*w[0,1,0]^2*w[0,0,1] + s1*k*w[0,1,0]*w[0,3,0] - 1/2*s1*k*w[0,2,0]^2 + 1/4*k*w[0,1,0]^4 + 1/2*k*w[0,0,1]^2)*y
 - w[0,2,0])
@Y3
f3*((-s1*w[0,0,1] - 1/2*k*w[0,1,0]^2)*x
 + (1/2*s1*k*w[0,1,0]*w[1,1,0] + 1/2*w[1,0,1])*y^2
 - (w[1,0,0] + k*w[0,0,1]*w[0,1,0] + 1/3*s1*w[0,1,0]^3)*y)
@X4
f4*((-1/8*k*w[3,0,0] - 1/8*k*w[2,3,0] - (1/4*w[0,0,1] + 1/8*s1*k*w[0,1,0]^2)*w[2,1,0]
   - 1/4*w[2,0,1]*w[0,1,0] - 1/2*w[1,1,0]*w[1,0,1] - 1/4*s1*k*w[0,1,0]*w[1,1,0]^2)*x*y
 + (1/4*w[0,1,0]*w[1,3,0] - 1/4*w[1,2,0]*w[0,2,0]
   + 1/4*(k*w[0,0,1]*w[0,1,0] + w[0,3,0] + s1*w[0,1,0]^3)*w[1,1,0]
   + 1/8*k*w[0,1,0]^2*w[1,0,1] + 1/4*s1*w[0,0,1]*w[1,0,1])*x
 + (1/48*k*s1*w[4,0,0] + 1/48*k*s1*w[3,3,0] + (1/24*s1*w[0,0,1] + 1/48*k*w[0,1,0]^2)*w[3,1,0]
   + 1/24*s1*w[0,1,0]*w[3,0,1] + 1/8*(k*w[0,1,0]*w[1,1,0] + s1*w[1,0,1])*w[2,1,0]
   + 1/8*s1*w[1,1,0]*w[2,0,1] + 1/24*k*w[1,1,0]^3)*y^3
 + (-1/8*s1*(w[2,3,0]*w[0,1,0] - w[2,2,0]*w[0,2,0])
   - 1/8*(w[0,1,0]^3 + s1*w[0,3,0] + s1*k*w[0,0,1]*w[0,1,0])*w[2,1,0]
   - 1/16*s1*k*w[2,0,1]*w[0,1,0]^2 - 1/8*w[2,0,1]*w[0,0,1]
   - 1/4*s1*w[1,3,0]*w[1,1,0] + 1/8*s1*w[1,2,0]^2
   - (1/8*k*s1*w[0,0,1] + 3/8*w[0,1,0]^2)*w[1,1,0]^2
   - 1/4*s1*k*w[1,1,0]*w[1,0,1]*w[0,1,0] - 1/8*w[1,0,1]^2)*y^2
 + (1/8*k*w[2,2,0])*y
 - 1/4*w[1,2,0]*w[0,1,0] + 1/2*w[0,2,0]*w[1,1,0] + 1/8*w[1,0,0]^2
 + (1/4*w[0,3,0] + 1/12*s1*w[0,1,0]^3 + 1/4*k*w[0,0,1]*w[0,1,0])*w[1,0,0]
 + 1/2*w[0,3,0]^2 + 1/3*s1*w[0,3,0]*w[0,1,0]^3
 + (1/2*k*w[0,3,0]*w[0,0,1] - 1/2*k*w[0,2,0]*w[0,1,1])*w[0,1,0]
 - 1/2*s1*w[0,1,1]^2 + 1/4*k*w[0,2,0]^2*w[0,0,1] - s1*w[0,2,0]*w[0,0,2]
 + 1/18*w[0,1,0]^6 + 5/24*k*s1*w[0,0,1]*w[0,1,0]^4
 + 1/2*w[0,0,1]^2*w[0,1,0]^2 + 1/12*k*s1*w[0,0,1]^3)
@Y4
f4*((1/4*w[2,1,0]*w[0,1,0] + 1/8*s1*k*w[2,0,1] + 1/4*w[1,1,0]^2)*x*y
 - ((1/8*k*w[0,1,0]^2 + 1/4*s1*w[0,0,1])*w[1,1,0] + 1/8*k*s1*w[2,0,0] + 1/4*s1*w[0,1,0]*w[1,0,1])*x
 - (1/48*k*w[3,0,1] + 1/24*s1*w[3,1,0]*w[0,1,0] + 1/8*s1*w[2,1,0]*w[1,1,0])*y^3
 + (1/16*k*w[3,0,0] + (1/16*s1*k*w[0,1,0]^2 + 1/8*w[0,0,1])*w[2,1,0]
   + 1/8*w[2,0,1]*w[0,1,0] + 1/8*s1*k*w[1,1,0]^2*w[0,1,0] + 1/4*w[1,1,0]*w[1,0,1])*y^2
 + (-1/8*k*w[0,1,0]^2 - 1/4*s1*w[0,0,1])*w[1,0,0]
 - 1/24*k*s1*w[0,1,0]^5 - 1/3*w[0,1,0]^3*w[0,0,1]
 + (1/4*k*w[0,2,0]^2 - 1/4*s1*k*w[0,0,1]^2)*w[0,1,0]
 + s1*w[0,1,1]*w[0,2,0])
)DATA";

// FNV-1a of kBuiltinLawData, pinned at review time.
const uint64_t kBuiltinLawChecksum = 0x8c26b9f063d07ca1ULL;

}  // namespace mkpkit::detail
