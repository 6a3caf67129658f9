# Abstracciones: gadgets, normas y suites de propiedades
