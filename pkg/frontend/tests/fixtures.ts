/** Captured service responses for the canonical synthetic fixtures
 * (annulus and crescent, full-frame ROI on a 120x120 canvas). The strings
 * are the exact bytes the service returns; tests parse them fresh. */

export const ANNULUS_REPORT_JSON =
  '{"schema":"erythro/1","roi":{"x":0,"y":0,"w":120,"h":120},"label":"Annulocyte","morphometry":{"area":3640,"perimeter":192,"compactness":1.24,"major_axis":68.5,"minor_axis":67.5,"axis_spacing":1.0,"varconvex":0,"ncc":null},"colorimetry":{"red_count":2376,"white_count":1264,"pct_red":65.27,"pct_white":34.73,"mean_color":[254,232,230],"mean_red_color":[255,222,219],"mean_white_color":[252,252,252],"uniform":false},"isolation":{"runs":[[26,54,12],[27,50,20],[28,47,26],[29,45,30],[30,43,34],[31,41,38],[32,40,40],[33,39,42],[34,38,44],[35,36,48],[36,35,50],[37,35,50],[38,34,52],[39,33,54],[40,32,56],[41,31,58],[42,31,58],[43,30,60],[44,30,60],[45,29,62],[46,29,62],[47,28,64],[48,28,64],[49,28,64],[50,27,66],[51,27,66],[52,27,66],[53,27,66],[54,26,68],[55,26,68],[56,26,68],[57,26,68],[58,26,68],[59,26,68],[60,26,68],[61,26,68],[62,26,68],[63,26,68],[64,26,68],[65,26,68],[66,27,66],[67,27,66],[68,27,66],[69,27,66],[70,28,64],[71,28,64],[72,28,64],[73,29,62],[74,29,62],[75,30,60],[76,30,60],[77,31,58],[78,31,58],[79,32,56],[80,33,54],[81,34,52],[82,35,50],[83,35,50],[84,36,48],[85,38,44],[86,39,42],[87,40,40],[88,41,38],[89,43,34],[90,45,30],[91,47,26],[92,50,20],[93,54,12]]},"trace":["compactness 1.24 >= 0.80: circular or elliptical","axis spacing 1.00 px <= 7 px: circular shape","white fraction 34.73% >= 33%: enlarged central pallor","label: Annulocyte"]}';

export const CRESCENT_REPORT_JSON =
  '{"schema":"erythro/1","roi":{"x":0,"y":0,"w":120,"h":120},"label":"Sickle","morphometry":{"area":1054,"perimeter":186,"compactness":0.38,"major_axis":52.5,"minor_axis":16.0,"axis_spacing":36.5,"varconvex":1,"ncc":2},"colorimetry":{"red_count":1054,"white_count":0,"pct_red":100.0,"pct_white":0.0,"mean_color":[255,222,219],"mean_red_color":[255,222,219],"mean_white_color":null,"uniform":true},"isolation":{"runs":[[30,55,10],[31,51,18],[32,48,24],[33,46,28],[34,44,23],[35,43,20],[36,41,20],[37,40,19],[38,39,18],[39,38,18],[40,37,18],[41,36,18],[42,36,17],[43,35,17],[44,34,17],[45,34,16],[46,33,17],[47,33,16],[48,32,17],[49,32,16],[50,32,16],[51,31,16],[52,31,16],[53,31,16],[54,31,16],[55,30,16],[56,30,16],[57,30,16],[58,30,16],[59,30,16],[60,30,16],[61,30,16],[62,30,16],[63,30,16],[64,30,16],[65,31,16],[66,31,16],[67,31,16],[68,31,16],[69,32,16],[70,32,16],[71,32,17],[72,33,16],[73,33,17],[74,34,16],[75,34,17],[76,35,17],[77,36,17],[78,36,18],[79,37,18],[80,38,18],[81,39,18],[82,40,19],[83,41,20],[84,43,20],[85,44,23],[86,46,28],[87,48,24],[88,51,18],[89,55,10]]},"trace":["compactness 0.38 < 0.80: non-convex, testing protruding extremities","2 protruding extremities == 2: falciform shape","red fraction 100.00% >= 91% corroborates the sickle form","label: Sickle"]}';
