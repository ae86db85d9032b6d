#include "origami/constructions.hpp"

namespace origami {

namespace {

// Disjoint cycles, 1-based, in the order they are listed in the source table.
const std::vector<std::vector<std::uint32_t>> z3_a_cycles{
    {1, 13, 193, 207, 243, 253},
    {2, 14, 194, 208, 244, 254},
    {3, 15, 195, 209, 245, 255},
    {4, 16, 196, 210, 246, 256},
    {5, 17, 197, 211, 247, 257},
    {6, 18, 198, 212, 248, 258},
    {7, 19, 199, 213, 249, 259},
    {8, 20, 200, 214, 250, 260},
    {9, 21, 201, 215, 251, 261},
    {10, 22, 202, 216, 252, 262},
    {11, 23, 203, 205, 241, 263},
    {12, 24, 204, 206, 242, 264},
    {25, 38, 266, 280, 220, 230, 26, 37, 265, 279, 219, 229},
    {27, 39, 267, 281, 221, 231},
    {28, 40, 268, 282, 222, 232},
    {29, 41, 269, 283, 223, 233},
    {30, 42, 270, 284, 224, 234},
    {31, 43, 271, 285, 225, 235},
    {32, 44, 272, 286, 226, 236},
    {33, 45, 273, 287, 227, 237},
    {34, 46, 274, 288, 228, 238},
    {35, 47, 275, 277, 217, 239},
    {36, 48, 276, 278, 218, 240},
    {49, 61, 433, 445, 337, 349},
    {50, 62, 434, 446, 338, 350},
    {51, 63, 435, 447, 339, 351},
    {52, 64, 436, 448, 340, 352},
    {53, 65, 437, 449, 341, 353},
    {54, 66, 438, 450, 342, 354},
    {55, 67, 439, 451, 343, 355},
    {56, 68, 440, 452, 344, 356},
    {57, 69, 441, 453, 345, 357},
    {58, 70, 442, 454, 346, 358},
    {59, 71, 443, 455, 347, 359},
    {60, 72, 444, 456, 348, 360},
    {73, 85, 361, 373, 457, 469},
    {74, 86, 362, 374, 458, 470},
    {75, 87, 363, 375, 459, 471},
    {76, 88, 364, 376, 460, 472},
    {77, 89, 365, 377, 461, 473},
    {78, 90, 366, 378, 462, 474},
    {79, 91, 367, 379, 463, 475},
    {80, 92, 368, 380, 464, 476},
    {81, 93, 369, 381, 465, 477},
    {82, 94, 370, 382, 466, 478},
    {83, 95, 371, 383, 467, 479},
    {84, 96, 372, 384, 468, 480},
    {97, 109, 385, 397, 481, 493},
    {98, 110, 386, 398, 482, 494},
    {99, 111, 387, 399, 483, 495},
    {100, 112, 388, 400, 484, 496},
    {101, 113, 389, 401, 485, 497},
    {102, 114, 390, 402, 486, 498},
    {103, 115, 391, 403, 487, 499},
    {104, 116, 392, 404, 488, 500},
    {105, 117, 393, 405, 489, 501},
    {106, 118, 394, 406, 490, 502},
    {107, 119, 395, 407, 491, 503},
    {108, 120, 396, 408, 492, 504},
    {121, 133, 505, 517, 409, 421},
    {122, 134, 506, 518, 410, 422},
    {123, 135, 507, 519, 411, 423},
    {124, 136, 508, 520, 412, 424},
    {125, 137, 509, 521, 413, 425},
    {126, 138, 510, 522, 414, 426},
    {127, 139, 511, 523, 415, 427},
    {128, 140, 512, 524, 416, 428},
    {129, 141, 513, 525, 417, 429},
    {130, 142, 514, 526, 418, 430},
    {131, 143, 515, 527, 419, 431},
    {132, 144, 516, 528, 420, 432},
    {145, 167, 539, 551, 299, 301},
    {146, 168, 540, 552, 300, 302},
    {147, 157, 529, 541, 289, 303},
    {148, 158, 530, 542, 290, 304},
    {149, 159, 531, 543, 291, 305},
    {150, 160, 532, 544, 292, 306},
    {151, 161, 533, 545, 293, 307},
    {152, 162, 534, 546, 294, 308},
    {153, 163, 535, 547, 295, 309},
    {154, 164, 536, 548, 296, 310},
    {155, 165, 537, 549, 297, 311},
    {156, 166, 538, 550, 298, 312},
    {169, 183, 315, 325, 553, 565},
    {170, 184, 316, 326, 554, 566},
    {171, 185, 317, 327, 555, 567},
    {172, 186, 318, 328, 556, 568},
    {173, 187, 319, 329, 557, 569},
    {174, 188, 320, 330, 558, 570},
    {175, 189, 321, 331, 559, 571},
    {176, 190, 322, 332, 560, 572},
    {177, 191, 323, 333, 561, 573},
    {178, 192, 324, 334, 562, 574},
    {179, 181, 313, 335, 563, 575},
    {180, 182, 314, 336, 564, 576},
};

const std::vector<std::vector<std::uint32_t>> z3_b_cycles{
    {1, 265, 289, 553, 433, 73},
    {2, 266, 290, 554, 434, 74},
    {3, 267, 291, 555, 435, 75},
    {4, 268, 292, 556, 436, 76},
    {5, 269, 293, 557, 437, 77},
    {6, 270, 294, 558, 438, 78},
    {7, 271, 295, 559, 439, 79},
    {8, 272, 296, 560, 440, 80},
    {9, 273, 297, 561, 441, 81},
    {10, 274, 298, 562, 442, 82},
    {11, 275, 299, 563, 443, 83, 12, 276, 300, 564, 444, 84},
    {13, 229, 157, 565, 493, 133},
    {14, 230, 158, 566, 494, 134},
    {15, 231, 159, 567, 495, 135},
    {16, 232, 160, 568, 496, 136},
    {17, 233, 161, 569, 497, 137},
    {18, 234, 162, 570, 498, 138},
    {19, 235, 163, 571, 499, 139},
    {20, 236, 164, 572, 500, 140},
    {21, 237, 165, 573, 501, 141},
    {22, 238, 166, 574, 502, 142},
    {23, 239, 167, 575, 503, 143},
    {24, 240, 168, 576, 504, 144},
    {25, 97, 505, 529, 169, 193, 26, 98, 506, 530, 170, 194},
    {27, 99, 507, 531, 171, 195},
    {28, 100, 508, 532, 172, 196},
    {29, 101, 509, 533, 173, 197},
    {30, 102, 510, 534, 174, 198},
    {31, 103, 511, 535, 175, 199},
    {32, 104, 512, 536, 176, 200},
    {33, 105, 513, 537, 177, 201},
    {34, 106, 514, 538, 178, 202},
    {35, 107, 515, 539, 179, 203},
    {36, 108, 516, 540, 180, 204},
    {37, 61, 469, 541, 325, 253},
    {38, 62, 470, 542, 326, 254},
    {39, 63, 471, 543, 327, 255},
    {40, 64, 472, 544, 328, 256},
    {41, 65, 473, 545, 329, 257},
    {42, 66, 474, 546, 330, 258},
    {43, 67, 475, 547, 331, 259},
    {44, 68, 476, 548, 332, 260},
    {45, 69, 477, 549, 333, 261},
    {46, 70, 478, 550, 334, 262},
    {47, 71, 479, 551, 335, 263},
    {48, 72, 480, 552, 336, 264},
    {49, 361, 145, 313, 385, 121},
    {50, 362, 146, 314, 386, 122},
    {51, 363, 147, 315, 387, 123},
    {52, 364, 148, 316, 388, 124},
    {53, 365, 149, 317, 389, 125},
    {54, 366, 150, 318, 390, 126},
    {55, 367, 151, 319, 391, 127},
    {56, 368, 152, 320, 392, 128},
    {57, 369, 153, 321, 393, 129},
    {58, 370, 154, 322, 394, 130},
    {59, 371, 155, 323, 395, 131},
    {60, 372, 156, 324, 396, 132},
    {85, 109, 421, 301, 181, 349},
    {86, 110, 422, 302, 182, 350},
    {87, 111, 423, 303, 183, 351},
    {88, 112, 424, 304, 184, 352},
    {89, 113, 425, 305, 185, 353},
    {90, 114, 426, 306, 186, 354},
    {91, 115, 427, 307, 187, 355},
    {92, 116, 428, 308, 188, 356},
    {93, 117, 429, 309, 189, 357},
    {94, 118, 430, 310, 190, 358},
    {95, 119, 431, 311, 191, 359},
    {96, 120, 432, 312, 192, 360},
    {205, 277, 397, 517, 445, 373},
    {206, 278, 398, 518, 446, 374},
    {207, 279, 399, 519, 447, 375},
    {208, 280, 400, 520, 448, 376},
    {209, 281, 401, 521, 449, 377},
    {210, 282, 402, 522, 450, 378},
    {211, 283, 403, 523, 451, 379},
    {212, 284, 404, 524, 452, 380},
    {213, 285, 405, 525, 453, 381},
    {214, 286, 406, 526, 454, 382},
    {215, 287, 407, 527, 455, 383},
    {216, 288, 408, 528, 456, 384},
    {217, 337, 457, 481, 409, 241},
    {218, 338, 458, 482, 410, 242},
    {219, 339, 459, 483, 411, 243},
    {220, 340, 460, 484, 412, 244},
    {221, 341, 461, 485, 413, 245},
    {222, 342, 462, 486, 414, 246},
    {223, 343, 463, 487, 415, 247},
    {224, 344, 464, 488, 416, 248},
    {225, 345, 465, 489, 417, 249},
    {226, 346, 466, 490, 418, 250},
    {227, 347, 467, 491, 419, 251},
    {228, 348, 468, 492, 420, 252},
};

} // namespace

Origami z3_reference() {
  static const Origami z = Origami::from_cycles(576, z3_a_cycles, z3_b_cycles);
  return z;
}

} // namespace origami
