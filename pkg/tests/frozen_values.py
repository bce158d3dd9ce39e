"""Frozen oracle values for unit tests.

generated by scripts/make_fixtures.py, 2026-08-22, oracle dps=60 (doubling check at 120).
Do not edit by hand; regenerate with the script instead.
"""

DIGAMMA_HALF = {
    0.0: ('-1.963510026021423549025258', '0.0'),
    0.5: ('-0.8681073626454772762528478', '1.440659519977514513300321'),
    1.0: ('-0.05176165099441254469070373', '1.564940517815879283958225'),
    5.0: ('1.607759321607187930069927', '1.570796326794825281680801'),
    11.9: ('2.476243799799519695881145', '1.570796326794896557998982'),
    12.0: ('2.484616944996103526932529', '1.570796326794896557998982'),
    12.1: ('2.492920522267321636888937', '1.570796326794896557998982'),
    40.0: ('3.688853409598022992099686', '1.570796326794896557998982'),
    50.0: ('3.912006337594566396376194', '1.570796326794896557998982'),
    100.0: ('4.605166019248503772587355', '1.570796326794896557998982'),
    1000.0: ('6.907755237315463148206618', '1.570796326794896557998982'),
}

LOG_ABS_GAMMA_SQ = {
    (0, 0.5): '0.2247744856192462337141080',
    (1, 5.0): '-10.64126004581827444894770',
    (-3, 7.0): '-31.99876483475368615927437',
    (10, 40.0): '-49.84419096918436054011181',
    (100, 100.0): '635.1065829726505853614071',
    (5, 0.0): '7.915627935237433021598008',
}

RATIO_POLAR = {
    (0, 1.0): ('0.9981342976878161410425605', '-0.6533674038750358903371307'),
    (1, 5.0): ('2.247220505424372127833976', '0.7107716937043332405821161'),
    (1, 10.0): ('3.166228039797512661124301', '0.7479449917541429737610770'),
    (2, 10.0): ('32.01649965252291707429322', '2.169851370939542167803893'),
    (5, 60.0): ('100963343.8148794174194336', '0.5793838570075010574456087'),
    (8, 100.0): ('1008519967226976.250000000', '-1.103810345485302768508973'),
}

R01 = {
    (1.0005, 0.1): ('5.451972179719835942535155', '-31.64329033444819927467506'),
    (1.001, 3.0): ('2.115148160222022788445884', '-22.89721207986623952024274'),
    (1.01, 1.0): ('2.106751368158473969316447', '-7.283966329039226472730206'),
    (1.02, 20.0): ('0.02212455308146010768410861', '12.48320639776674667587031'),
    (1.02, 50.0): ('-0.09368457770434290843297731', '19.45252312501190417037833'),
    (1.05, 5.0): ('-0.6394279926620570764228546', '-2.809029350903927912952440'),
    (1.5, 0.5): ('0.8758249962200617133589731', '-1.210386861133724512029630'),
    (1.5, 1.0): ('-0.02948809767673103710006188', '-1.188873556826450350598634'),
    (2.0, 1.0): ('-0.3581837221362964562842990', '-0.6878736525633714071759073'),
    (2.5, 8.0): ('0.2168478718649581027388962', '-1.691347001297811791786785'),
}

CLIMB_R10 = {
    (2.0, 3.0): '80055505.67855635285377502',
}

P_SERIES = {
    (0.5, 3, 4.0): '564.8265391303989417792764',
    (1.5, 2, 5.0): '1.790146314335110400151052',
    (2.0, 0, 10.0): '0.1879846891775871497998196',
    (0.9, 5, 40.0): '352680193903115.0625000000',
    (-0.5, 1, 3.0): '422.5281854429446184440167',
    (0.0, 4, 2.5): '1052.451769197720068405033',
}

CONNECTION_PI = {
    (2, 10.0): '10250.56250000000000000000',
}

MARCH = {
    (50.0, 10, 80.0, 'R'): ('-136603117108809824.0000000', '-271285474609573120.0000000'),
    (10.0, 1, 20.0, 'R'): ('1.474636286873810320230405', '1.920315096651455943899123'),
    (10.0, 0, 30.0, 'P'): ('0.02327829000397473382943936', '-0.1214359601774904623416873'),
    (30.0, 5, 60.0, 'P'): ('-301627.7766023297444917262', '-29428550.80588036403059959'),
    (50.0, 40, 80.0, 'R'): ('-3.082124682397727627235128e+74', '-1.930103007628199062357397e+75'),
    (1.5, 0, 1.0, 'R'): ('-0.02948809767673103710006188', '-1.063360835886360877822199'),
}

QUAD = {
    (2.0, 1, 5.0): ('0.5294068647666626548087265', '-3.794898624222076133349901', '-1.977395136230029937252084', '-1.723915282145339622488223'),
}

FERRERS_PR = {
    (0.5, 2, 7.0): ('10394.93885718641649873462', '-85154.92618209771171677858'),
    (-0.5, 1, 3.0): ('422.5281854429446184440167', '-1674.941516054328758400516'),
    (0.0, 0, 10.0): ('837654.6460083710262551904', '-8366015.568460554815828800'),
    (0.9, 5, 40.0): ('352680193903115.0625000000', '-32888694393947532.00000000'),
}

BESSEL_QUAD = {
    0.5: ('0.9384698072408128588506315', '-0.4445187335067065648175344', '0.2422684576748738993767773', '-1.471472392670243101164829'),
    1.0: ('0.7651976865579666053918118', '0.08825696421567695570953305', '0.4400505857449334978781508', '-0.7812128213002886845117700'),
    5.0: ('-0.1775967713143382920026880', '-0.3085176252490337556189104', '-0.3275791375914652303613650', '0.1478631433912268311470228'),
    12.0: ('0.04768931079683353529974355', '-0.2252373126343614473388044', '-0.2234471044906276016028812', '-0.05709921826089651986091411'),
    100.0: ('0.01998585030422312183717715', '-0.07724431336508315315558804', '-0.07714535201411215625810769', '-0.02037231200275979245417624'),
}
