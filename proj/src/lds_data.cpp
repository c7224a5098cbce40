#include "qmccop/lds.hpp"

namespace qmccop::lds {
namespace {
// Joe-Kuo "new-joe-kuo-6" primitive polynomials and initial direction
// numbers, first 128 dimensions (see data/sobol_joe_kuo.txt).
struct SobolRow { int s; unsigned a; unsigned m[18]; };
constexpr SobolRow kSobolRows[] = {
    {1, 0u, {1u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {2, 1u, {1u, 3u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {3, 1u, {1u, 3u, 1u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {3, 2u, {1u, 1u, 1u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {4, 1u, {1u, 1u, 3u, 3u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {4, 4u, {1u, 3u, 5u, 13u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {5, 2u, {1u, 1u, 5u, 5u, 17u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {5, 4u, {1u, 1u, 5u, 5u, 5u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {5, 7u, {1u, 1u, 7u, 11u, 19u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {5, 11u, {1u, 1u, 5u, 1u, 1u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {5, 13u, {1u, 1u, 1u, 3u, 11u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {5, 14u, {1u, 3u, 5u, 5u, 31u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {6, 1u, {1u, 3u, 3u, 9u, 7u, 49u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {6, 13u, {1u, 1u, 1u, 15u, 21u, 21u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {6, 16u, {1u, 3u, 1u, 13u, 27u, 49u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {6, 19u, {1u, 1u, 1u, 15u, 7u, 5u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {6, 22u, {1u, 3u, 1u, 15u, 13u, 25u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {6, 25u, {1u, 1u, 5u, 5u, 19u, 61u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 1u, {1u, 3u, 7u, 11u, 23u, 15u, 103u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 4u, {1u, 3u, 7u, 13u, 13u, 15u, 69u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 7u, {1u, 1u, 3u, 13u, 7u, 35u, 63u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 8u, {1u, 3u, 5u, 9u, 1u, 25u, 53u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 14u, {1u, 3u, 1u, 13u, 9u, 35u, 107u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 19u, {1u, 3u, 1u, 5u, 27u, 61u, 31u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 21u, {1u, 1u, 5u, 11u, 19u, 41u, 61u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 28u, {1u, 3u, 5u, 3u, 3u, 13u, 69u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 31u, {1u, 1u, 7u, 13u, 1u, 19u, 1u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 32u, {1u, 3u, 7u, 5u, 13u, 19u, 59u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 37u, {1u, 1u, 3u, 9u, 25u, 29u, 41u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 41u, {1u, 3u, 5u, 13u, 23u, 1u, 55u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 42u, {1u, 3u, 7u, 3u, 13u, 59u, 17u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 50u, {1u, 3u, 1u, 3u, 5u, 53u, 69u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 55u, {1u, 1u, 5u, 5u, 23u, 33u, 13u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 56u, {1u, 1u, 7u, 7u, 1u, 61u, 123u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 59u, {1u, 1u, 7u, 9u, 13u, 61u, 49u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {7, 62u, {1u, 3u, 3u, 5u, 3u, 55u, 33u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 14u, {1u, 3u, 1u, 15u, 31u, 13u, 49u, 245u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 21u, {1u, 3u, 5u, 15u, 31u, 59u, 63u, 97u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 22u, {1u, 3u, 1u, 11u, 11u, 11u, 77u, 249u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 38u, {1u, 3u, 1u, 11u, 27u, 43u, 71u, 9u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 47u, {1u, 1u, 7u, 15u, 21u, 11u, 81u, 45u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 49u, {1u, 3u, 7u, 3u, 25u, 31u, 65u, 79u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 50u, {1u, 3u, 1u, 1u, 19u, 11u, 3u, 205u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 52u, {1u, 1u, 5u, 9u, 19u, 21u, 29u, 157u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 56u, {1u, 3u, 7u, 11u, 1u, 33u, 89u, 185u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 67u, {1u, 3u, 3u, 3u, 15u, 9u, 79u, 71u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 70u, {1u, 3u, 7u, 11u, 15u, 39u, 119u, 27u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 84u, {1u, 1u, 3u, 1u, 11u, 31u, 97u, 225u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 97u, {1u, 1u, 1u, 3u, 23u, 43u, 57u, 177u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 103u, {1u, 3u, 7u, 7u, 17u, 17u, 37u, 71u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 115u, {1u, 3u, 1u, 5u, 27u, 63u, 123u, 213u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {8, 122u, {1u, 1u, 3u, 5u, 11u, 43u, 53u, 133u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 8u, {1u, 3u, 5u, 5u, 29u, 17u, 47u, 173u, 479u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 13u, {1u, 3u, 3u, 11u, 3u, 1u, 109u, 9u, 69u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 16u, {1u, 1u, 1u, 5u, 17u, 39u, 23u, 5u, 343u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 22u, {1u, 3u, 1u, 5u, 25u, 15u, 31u, 103u, 499u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 25u, {1u, 1u, 1u, 11u, 11u, 17u, 63u, 105u, 183u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 44u, {1u, 1u, 5u, 11u, 9u, 29u, 97u, 231u, 363u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 47u, {1u, 1u, 5u, 15u, 19u, 45u, 41u, 7u, 383u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 52u, {1u, 3u, 7u, 7u, 31u, 19u, 83u, 137u, 221u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 55u, {1u, 1u, 1u, 3u, 23u, 15u, 111u, 223u, 83u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 59u, {1u, 1u, 5u, 13u, 31u, 15u, 55u, 25u, 161u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 62u, {1u, 1u, 3u, 13u, 25u, 47u, 39u, 87u, 257u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 67u, {1u, 1u, 1u, 11u, 21u, 53u, 125u, 249u, 293u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 74u, {1u, 1u, 7u, 11u, 11u, 7u, 57u, 79u, 323u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 81u, {1u, 1u, 5u, 5u, 17u, 13u, 81u, 3u, 131u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 82u, {1u, 1u, 7u, 13u, 23u, 7u, 65u, 251u, 475u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 87u, {1u, 3u, 5u, 1u, 9u, 43u, 3u, 149u, 11u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 91u, {1u, 1u, 3u, 13u, 31u, 13u, 13u, 255u, 487u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 94u, {1u, 3u, 3u, 1u, 5u, 63u, 89u, 91u, 127u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 103u, {1u, 1u, 3u, 3u, 1u, 19u, 123u, 127u, 237u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 104u, {1u, 1u, 5u, 7u, 23u, 31u, 37u, 243u, 289u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 109u, {1u, 1u, 5u, 11u, 17u, 53u, 117u, 183u, 491u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 122u, {1u, 1u, 1u, 5u, 1u, 13u, 13u, 209u, 345u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 124u, {1u, 1u, 3u, 15u, 1u, 57u, 115u, 7u, 33u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 137u, {1u, 3u, 1u, 11u, 7u, 43u, 81u, 207u, 175u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 138u, {1u, 3u, 1u, 1u, 15u, 27u, 63u, 255u, 49u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 143u, {1u, 3u, 5u, 3u, 27u, 61u, 105u, 171u, 305u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 145u, {1u, 1u, 5u, 3u, 1u, 3u, 57u, 249u, 149u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 152u, {1u, 1u, 3u, 5u, 5u, 57u, 15u, 13u, 159u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 157u, {1u, 1u, 1u, 11u, 7u, 11u, 105u, 141u, 225u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 167u, {1u, 3u, 3u, 5u, 27u, 59u, 121u, 101u, 271u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 173u, {1u, 3u, 5u, 9u, 11u, 49u, 51u, 59u, 115u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 176u, {1u, 1u, 7u, 1u, 23u, 45u, 125u, 71u, 419u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 181u, {1u, 1u, 3u, 5u, 23u, 5u, 105u, 109u, 75u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 182u, {1u, 1u, 7u, 15u, 7u, 11u, 67u, 121u, 453u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 185u, {1u, 3u, 7u, 3u, 9u, 13u, 31u, 27u, 449u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 191u, {1u, 3u, 1u, 15u, 19u, 39u, 39u, 89u, 15u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 194u, {1u, 1u, 1u, 1u, 1u, 33u, 73u, 145u, 379u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 199u, {1u, 3u, 1u, 15u, 15u, 43u, 29u, 13u, 483u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 218u, {1u, 1u, 7u, 3u, 19u, 27u, 85u, 131u, 431u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 220u, {1u, 3u, 3u, 3u, 5u, 35u, 23u, 195u, 349u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 227u, {1u, 3u, 3u, 7u, 9u, 27u, 39u, 59u, 297u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 229u, {1u, 1u, 3u, 9u, 11u, 17u, 13u, 241u, 157u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 230u, {1u, 3u, 7u, 15u, 25u, 57u, 33u, 189u, 213u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 234u, {1u, 1u, 7u, 1u, 9u, 55u, 73u, 83u, 217u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 236u, {1u, 3u, 3u, 13u, 19u, 27u, 23u, 113u, 249u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 241u, {1u, 3u, 5u, 3u, 23u, 43u, 3u, 253u, 479u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 244u, {1u, 1u, 5u, 5u, 11u, 5u, 45u, 117u, 217u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {9, 253u, {1u, 3u, 3u, 7u, 29u, 37u, 33u, 123u, 147u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 4u, {1u, 3u, 1u, 15u, 5u, 5u, 37u, 227u, 223u, 459u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 13u, {1u, 1u, 7u, 5u, 5u, 39u, 63u, 255u, 135u, 487u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 19u, {1u, 3u, 1u, 7u, 9u, 7u, 87u, 249u, 217u, 599u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 22u, {1u, 1u, 3u, 13u, 9u, 47u, 7u, 225u, 363u, 247u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 50u, {1u, 3u, 7u, 13u, 19u, 13u, 9u, 67u, 9u, 737u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 55u, {1u, 3u, 5u, 5u, 19u, 59u, 7u, 41u, 319u, 677u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 64u, {1u, 1u, 5u, 3u, 31u, 63u, 15u, 43u, 207u, 789u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 69u, {1u, 1u, 7u, 9u, 13u, 39u, 3u, 47u, 497u, 169u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 98u, {1u, 3u, 1u, 7u, 21u, 17u, 97u, 19u, 415u, 905u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 107u, {1u, 3u, 7u, 1u, 3u, 31u, 71u, 111u, 165u, 127u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 115u, {1u, 1u, 5u, 11u, 1u, 61u, 83u, 119u, 203u, 847u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 121u, {1u, 3u, 3u, 13u, 9u, 61u, 19u, 97u, 47u, 35u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 127u, {1u, 1u, 7u, 7u, 15u, 29u, 63u, 95u, 417u, 469u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 134u, {1u, 3u, 1u, 9u, 25u, 9u, 71u, 57u, 213u, 385u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 140u, {1u, 3u, 5u, 13u, 31u, 47u, 101u, 57u, 39u, 341u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 145u, {1u, 1u, 3u, 3u, 31u, 57u, 125u, 173u, 365u, 551u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 152u, {1u, 3u, 7u, 1u, 13u, 57u, 67u, 157u, 451u, 707u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 158u, {1u, 1u, 1u, 7u, 21u, 13u, 105u, 89u, 429u, 965u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 161u, {1u, 1u, 5u, 9u, 17u, 51u, 45u, 119u, 157u, 141u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 171u, {1u, 3u, 7u, 7u, 13u, 45u, 91u, 9u, 129u, 741u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 181u, {1u, 3u, 7u, 1u, 23u, 57u, 67u, 141u, 151u, 571u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 194u, {1u, 1u, 3u, 11u, 17u, 47u, 93u, 107u, 375u, 157u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 199u, {1u, 3u, 3u, 5u, 11u, 21u, 43u, 51u, 169u, 915u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 203u, {1u, 1u, 5u, 3u, 15u, 55u, 101u, 67u, 455u, 625u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 208u, {1u, 3u, 5u, 9u, 1u, 23u, 29u, 47u, 345u, 595u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 227u, {1u, 3u, 7u, 7u, 5u, 49u, 29u, 155u, 323u, 589u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
    {10, 242u, {1u, 3u, 3u, 7u, 5u, 41u, 127u, 61u, 261u, 717u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 0u}},
};
// scramble factor per dimension, same order as the prime bases
// (see data/ghalton_factors.txt for the derivation criterion)
constexpr int kGHaltonFactors[] = {
    1, 2, 4, 5, 5, 10, 11, 8, 17, 23, 28, 22, 30, 30, 11, 45,
    18, 36, 53, 60, 63, 61, 64, 62, 62, 10, 24, 76, 24, 73, 79, 115,
    107, 103, 45, 98, 123, 141, 65, 100, 104, 143, 81, 45, 82, 167, 168, 178,
    190, 148, 72, 185, 189, 188, 156, 202, 198, 200, 218, 213, 205, 218, 218, 260,
    231, 143, 149, 122, 110, 245, 131, 233, 253, 141, 296, 243, 191, 257, 316, 244,
    344, 272, 328, 307, 288, 280, 322, 319, 296, 288, 213, 331, 394, 360, 415, 296,
    311, 310, 216, 277, 347, 244, 277, 268, 382, 281, 280, 322, 360, 360, 272, 396,
    474, 403, 289, 277, 379, 435, 486, 489, 476, 354, 524, 306, 546, 272, 317, 380,
    
};
}  // namespace

int embedded_sobol_dimensions() { return 128; }
int embedded_ghalton_dimensions() { return 128; }

SobolDirectionRow embedded_sobol_row(int dim) {
  // dimension 1 uses the identity matrix (all m_k = 1)
  if (dim == 1) return SobolDirectionRow{0, 0, {}};
  const SobolRow& r = kSobolRows[dim - 2];
  SobolDirectionRow out;
  out.degree = r.s;
  out.poly = r.a;
  out.m.assign(r.m, r.m + r.s);
  return out;
}

int embedded_ghalton_factor(int dim) { return kGHaltonFactors[dim - 1]; }

}  // namespace qmccop::lds
