"""Frozen oracle values. Generated by tools/make_oracles.py.
Do not edit by hand; rerun the script instead.
"""

FIG_DIVISION_EVENTS = [(7, (1, 2, 4), 1), (8, (2, 2, 4), 2), (10, (2, 4, 4), 3), (11, (2, 4, 5), 2), (12, (2, 5, 5), 3), (13, (2, 5, 6), 2), (14, (2, 6, 6), 3), (16, (2, 6, 8), 2), (18, (2, 8, 8), 3), (27, (2, 8, 17), 2), (29, (2, 10, 17), 1), (37, (10, 10, 17), 2), (40, (10, 13, 17), 1), (43, (13, 13, 17), 2), (44, (13, 14, 17), 1), (45, (14, 14, 17), 2), (48, (14, 17, 17), 3), (49, (14, 17, 18), None)]

GOLDEN_SIX_FLOAT = ([0.14285714285714285, 0.25, 0.4], [0.25, 0.4, 0.5714285714285714])

GOLDEN_PERIOD_EVENTS_FLOAT = [(7.0, (1.0, 2.0, 4.0), 1), (8.0, (2.0, 2.0, 4.0), 2), (10.0, (2.0, 4.0, 4.0), 3)]

SYS2_SIX_FLOAT = ([0.16666666666666666, 0.2727272727272727, 0.375], [0.2857142857142857, 0.375, 0.5454545454545454])

SYS3_SIX_FLOAT = ([0.16666666666666666, 0.2857142857142857, 0.375], [0.2857142857142857, 0.4, 0.5])

HULL_CASES = [
    ([('1/3', '1/3', '1/3'), ('0', '1/2', '1/2'), ('0', '0', '1')], [0, 1, 2]),
    ([('1/7', '2/7', '4/7'), ('1/4', '1/4', '1/2'), ('1/5', '2/5', '2/5')], [1, 2, 0]),
    ([('1/4', '1/4', '1/2'), ('1/5', '2/5', '2/5'), ('0', '0', '1'), ('0', '1/3', '2/3')], [0, 1, 3, 2]),
    ([('0', '0', '1'), ('1/11', '2/11', '8/11'), ('1/9', '5/36', '3/4'), ('3/11', '16/55', '24/55'), ('0', '1/5', '4/5'), ('0', '1/2', '1/2')], [0, 3, 5]),
    ([('5/22', '3/8', '35/88'), ('1/4', '15/44', '9/22'), ('0', '0', '1'), ('0', '1/5', '4/5'), ('0', '3/7', '4/7')], [2, 1, 0, 4]),
    ([('0', '1/3', '2/3'), ('2/33', '4/33', '9/11'), ('0', '0', '1'), ('0', '2/5', '3/5'), ('0', '1/7', '6/7'), ('1/6', '1/6', '2/3'), ('0', '1/9', '8/9')], [5, 3, 2]),
    ([('0', '3/10', '7/10'), ('0', '3/11', '8/11'), ('0', '0', '1'), ('1/10', '2/5', '1/2')], [2, 3, 0]),
    ([('4/27', '5/27', '2/3'), ('0', '3/11', '8/11'), ('4/81', '14/81', '7/9'), ('0', '2/7', '5/7'), ('1/22', '5/11', '1/2'), ('1/21', '2/21', '6/7'), ('5/48', '3/8', '25/48')], [0, 6, 4, 3, 1, 5]),
    ([('0', '1/4', '3/4'), ('15/88', '3/8', '5/11'), ('1/9', '4/9', '4/9'), ('0', '2/7', '5/7'), ('0', '1/3', '2/3'), ('4/21', '1/3', '10/21'), ('2/15', '1/3', '8/15'), ('0', '0', '1')], [7, 5, 1, 2, 4]),
]

JARNIK_POINTS = [('0', 0.5), ('1/3', 0.3333333333333333), ('1/4', 0.4), ('1/10', 0.47058823529411764), ('1/7', 0.45454545454545453), ('2/7', 0.375), ('5/16', 0.3529411764705882)]

SET_DIST_CASES = [([('1', '-2'), ('-6/5', '2'), ('-2', '2'), ('0', '1'), ('10/7', '0')], [('1', '2'), ('-1/2', '2')], 4.0), ([('10/7', '2')], [('2', '0'), ('0', '2/3'), ('-2', '0'), ('-1', '2')], 3.428571428571429), ([('0', '0'), ('2', '2/3'), ('2', '-2'), ('-2', '2'), ('2', '2')], [('-2', '-2'), ('2/5', '-2'), ('2', '-2'), ('0', '0'), ('-2', '2')], 2.0), ([('6/5', '-2/3'), ('0', '10/7'), ('2', '2')], [('2/3', '0')], 2.0), ([('2/7', '4/3'), ('-2', '-2/7'), ('-4/3', '-2')], [('-2', '-2/5'), ('6/7', '-2'), ('1', '-2'), ('2', '10/7'), ('0', '-2')], 2.333333333333333), ([('2', '2'), ('-2', '-2'), ('0', '-3/2')], [('6/7', '0'), ('-10/7', '-2/7'), ('2', '-6/5'), ('2', '0')], 2.0), ([('0', '6/5'), ('2', '2/5'), ('-2', '0'), ('2', '-2'), ('-3/2', '1/2')], [('2/5', '2'), ('-2', '2'), ('2', '4/3'), ('2/7', '0'), ('2', '4/3')], 2.0), ([('2', '-2'), ('2/3', '2'), ('-2', '2')], [('-6/7', '-3/2'), ('-2', '2')], 2.857142857142857)]

MEMBERSHIP_CASES = [(['1/7', '1/4', '2/5', '1/4', '2/5', '4/7'], True), (['1/6', '3/11', '3/8', '2/7', '3/8', '6/11'], True), (['1/6', '2/7', '3/8', '2/7', '2/5', '1/2'], True), (['0', '0', '2/5', '1/4', '2/5', '1'], True), (['1/14', '8974/56443', '1/3', '1/3', '535/1176', '38495/56443'], True), (['2/9', '3/14', '1/3', '1/3', '67/180', '1'], False), (['9/56', '0', '2/5', '1/4', '907/2240', '1'], False), (['0', '0', '8/19', '3/14', '81/190', '1'], True), (['0', '1/24', '1/3', '1/3', '25/54', '1/3'], False), (['0', '0', '1/2', '0', '1/2', '1'], True), (['0', '1/4', '1/2', '0', '1/2', '1'], False), (['1/24', '0', '10/21', '1/12', '1927/4032', '1'], False), (['0', '1/2', '17/45', '11/39', '49/120', '17/39'], False), (['1/3', '1/2', '1/3', '1/3', '1/3', '1/3'], False), (['0', '3/13', '1/2', '0', '1/2', '3/4'], False), (['13/56', '13/42', '16/45', '13/42', '43/112', '2043/3377'], False), (['7/75', '939487/5162320', '3/7', '1/5', '3319/7350', '173465/258116'], False), (['0', '5/18', '1/2', '0', '1/2', '7/9'], False), (['0', '1/7', '1/2', '0', '1/2', '20/21'], False), (['8/189', '10757/80946', '19/42', '4/27', '19/42', '3439/4497'], False), (['1/11', '9/32', '7/16', '2/11', '871/1936', '11/15'], False), (['0', '3/8', '7/15', '1/9', '103/210', '1/3'], False), (['0', '1/14', '1/3', '1/3', '3/7', '11/15'], False), (['1/182', '0', '40/81', '1/42', '12167/24570', '5/12'], False), (['1/10', '0', '3/7', '1/5', '69/160', '1'], False), (['0', '0', '5/13', '3/11', '151/338', '1'], True), (['0', '0', '1/2', '0', '1/2', '1'], True), (['1/9', '0', '5/12', '2/9', '77/180', '1'], False), (['4/63', '0', '5/12', '2/9', '59/126', '4/5'], False), (['0', '0', '1/3', '1/3', '5/14', '1'], True), (['4/143', '0', '11/23', '1/13', '11/23', '1'], False), (['20/429', '0', '31/66', '4/39', '2033/4290', '1'], False), (['1/60', '0', '28/57', '1/30', '6163/12540', '1'], False), (['13/252', '61973/994968', '16/45', '13/42', '1643/3780', '767167/829140'], False), (['10/351', '0', '29/63', '5/39', '2603/5616', '3/8'], False), (['0', '0', '1/2', '0', '1/2', '1'], True), (['0', '0', '8/17', '1/10', '179/374', '1'], True), (['1/30', '1/5', '4/9', '1/6', '863/1800', '29/45'], False), (['1/12', '3/13', '10/27', '7/24', '377/864', '23/27'], False), (['0', '1/14', '1/2', '0', '1/2', '1/3'], False), (['1/3', '5/18', '1/3', '1/3', '1/3', '5/9'], False), (['0', '1/5', '13/27', '1/15', '53/108', '1/3'], False), (['1/6', '0', '1/3', '1/3', '7/18', '1'], False), (['1/8', '877/5427', '3/7', '1/5', '317/728', '466/603'], False), (['2/21', '1/2', '1/3', '1/3', '11/28', '5/9'], False), (['1/112', '1/2', '12/25', '1/14', '1373/2800', '5/9'], False), (['3/11', '261/4102', '1/3', '1/3', '15/44', '1877/2051'], False), (['64/363', '0', '17/42', '8/33', '10357/25410', '1'], False), (['0', '1/2', '1/2', '0', '1/2', '8/21'], False), (['0', '0', '1/2', '0', '1/2', '1'], True), (['0', '0', '1/3', '1/3', '9/22', '1'], True), (['1/24', '0', '4/9', '1/6', '847/1872', '1'], False), (['0', '0', '1/2', '0', '1/2', '1'], True), (['0', '0', '26/57', '5/36', '97/209', '1'], True), (['7/65', '15/383', '7/17', '3/13', '29/65', '353/383'], False), (['1/30', '3/22', '4/9', '1/6', '4/9', '1/2'], False), (['1/63', '40501/483924', '17/36', '2/21', '17/36', '2931/3292'], False), (['1/36', '32/309', '7/15', '1/9', '7/15', '245/309'], False), (['0', '1/26', '5/11', '1/7', '38/77', '1'], False), (['0', '0', '1/2', '0', '1/2', '1'], True), (['2/63', '1/3', '11/27', '5/21', '83/180', '5/6'], False), (['1/45', '1/2', '16/33', '1/18', '1684/3465', '1'], False), (['1/3', '1/22', '1/3', '1/3', '1/3', '1/2'], False), (['0', '0', '3/8', '2/7', '13/28', '1'], True), (['1/90', '0', '4/9', '1/6', '449/990', '7/9'], False), (['0', '1/2', '23/51', '5/33', '143/306', '7/9'], False), (['13/420', '160109/3209985', '16/45', '13/42', '4559/10080', '3049876/3209985'], False), (['0', '0', '1/3', '1/3', '7/15', '1'], True), (['5/28', '1/2', '11/27', '5/21', '1237/3024', '20/21'], False), (['5/88', '135394/1202235', '23/51', '5/33', '8281/17952', '931447/1202235'], False), (['0', '0', '17/36', '2/21', '139/288', '1'], True), (['11/78', '3/20', '17/45', '11/39', '6551/16380', '5/9'], False), (['1/9', '9009/100736', '5/12', '2/9', '109/252', '5295/6296'], False), (['4/65', '13893/183967', '9/20', '2/13', '359/780', '156181/183967'], False), (['1/6', '0', '1/3', '1/3', '55/156', '1'], False), (['1/15', '1/6', '4/9', '1/6', '4/9', '56/81'], False), (['0', '1/3', '5/12', '2/9', '19/39', '7/9'], False), (['1/8', '11/30', '1/3', '1/3', '7/16', '1'], False), (['0', '7/1224', '16/33', '1/18', '1/2', '152/153'], False), (['0', '0', '1/2', '0', '1/2', '1'], True)]

GOLDEN_POWER_VERTICES = {0.5: [(0.22654091966098644, 0.3203772410170408, 0.4530818393219729), (0.29289321881345254, 0.29289321881345254, 0.4142135623730951), (0.2612038749637415, 0.3693980625181293, 0.3693980625181293)], 0.001: [(0.3331023109834789, 0.33333327994967155, 0.33356440906684953), (0.33325630808471607, 0.33325630808471607, 0.33348738383056786), (0.33317931842520854, 0.33341034078739573, 0.33341034078739573)]}
