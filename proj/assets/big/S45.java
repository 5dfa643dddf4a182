class S45 extends Abstract14 {
  void enter() {
    new S40();
    send("msg19");
    send("msg15");
    send("msg9");
  }
  void exit() {
    new S48();
    log("note");
    log("note");
    new S70();
  }
  public void handle() {
    switch (event) {
      case EV1267:
        send("msg15");
        new S86();
        switch (event) {
          case EV1268:
            switch (event) {
              case EV1269:
                new S15();
                send("msg6");
                new S26();
                log("note");
                break;
              case EV1270:
                new S47();
                break;
              case EV1271:
                new S61();
                new S39();
                log("note");
                break;
            }
            break;
          case EV1272:
            new S62();
            new S7();
            switch (event) {
              case EV1273:
                new S47();
                new S76();
                break;
              case EV1274:
                send("msg4");
                new S16();
                new S24();
                new S3();
                break;
            }
            break;
          case EV1275:
            new S32();
            try {
              new State();
              new S8();
              send("msg2");
            } catch (TimeoutException e) {
              new S43();
            }
            log("note");
            if (x9 > 0) {
              new S56();
              new S7();
            }
            break;
        }
        break;
    }
  }
  void tick() {
    try {
      new State();
      new S100();
    } catch (TimeoutException e) {
      new S61();
    } catch (IllegalStateException e) {
      new S37();
      if (x1 > 0) {
        try {
          send("msg17");
          new S14();
          send("msg12");
          new S38();
        } finally {
          send("msg5");
        }
      } else {
        switch (event) {
          case EV1276:
            new S31();
            break;
        }
        new State();
      }
      new S82();
    }
  }
  void reset() {
    new Helper();
    if (x0 > 0) {
      new S30();
      try {
        try {
          new S55();
          new S34();
          log("note");
        } finally {
          new State();
          new S19();
          new S32();
        }
        new S81();
        log("note");
      } catch (IllegalStateException e) {
        send("msg17");
      }
      new S52();
      send("msg17");
    } else {
      switch (event) {
        case EV1277:
          log("note");
          new S3();
          new S87();
          break;
      }
      send("msg17");
      new State();
      switch (event) {
        case EV1278:
          new S62();
          new S55();
          send("msg11");
          if (x7 > 0) {
            new S40();
            new S35();
          }
          break;
      }
    }
    send("msg9");
  }
  public void open() {
    try {
      try {
        new Helper();
        new S3();
        send("msg6");
        if (x4 > 0) {
          new S36();
          send("msg0");
        }
      } catch (IOException e) {
        send("msg12");
        new S79();
        try {
          new S33();
          new S98();
        } catch (TimeoutException e) {
          new S34();
          new S4();
          send("msg13");
          new S5();
        } catch (IllegalStateException e) {
          new State();
          send("msg17");
        }
        send("msg1");
      }
      new S52();
      switch (event) {
        case EV1279:
          new S17();
          send("msg5");
          break;
        case EV1280:
          send("msg5");
          try {
            new S2();
            new S38();
          } catch (IOException e) {
            send("msg5");
            send("msg2");
          }
          if (x1 > 0) {
            log("note");
          }
          new S41();
          break;
      }
    } catch (TimeoutException e) {
      new S65();
      send("msg6");
    } catch (IOException e) {
      try {
        try {
          new S8();
          send("msg9");
        } catch (TimeoutException e) {
          send("msg19");
        }
        send("msg8");
        send("msg15");
        if (x2 > 0) {
          log("note");
          log("note");
          log("note");
        }
      } finally {
        try {
          log("note");
          new S86();
        } catch (TimeoutException e) {
          send("msg17");
          new S73();
          new S56();
          send("msg19");
        } catch (IOException e) {
          new S20();
          send("msg10");
        }
      }
      new S45();
      log("note");
      switch (event) {
        case EV1281:
          if (x3 > 0) {
            send("msg6");
          } else {
            send("msg7");
            new S66();
            new S96();
            new S65();
          }
          try {
            new S71();
            log("note");
            send("msg4");
            new S61();
          } finally {
            new S40();
            send("msg11");
          }
          break;
      }
    }
  }
  void close() {
    switch (event) {
      case EV1282:
        new S35();
        switch (event) {
          case EV1283:
            try {
              new S97();
              send("msg15");
              new S68();
              send("msg3");
            } catch (TimeoutException e) {
              send("msg12");
              new S46();
              new S12();
            } catch (TimeoutException e) {
              new S19();
            }
            switch (event) {
              case EV1284:
                new S48();
                break;
              case EV1285:
                send("msg9");
                new S87();
                break;
              case EV1286:
                new S91();
                send("msg10");
                break;
            }
            try {
              send("msg14");
              new S35();
              new S30();
              new S97();
            } catch (IOException e) {
              new S16();
              new S97();
            } catch (TimeoutException e) {
              log("note");
            }
            try {
              new S54();
            } finally {
              log("note");
              new S24();
            }
            break;
        }
        break;
      case EV1287:
        if (x3 > 0) {
          new S49();
        }
        try {
          new S44();
        } catch (IOException e) {
          new S51();
          new S86();
          send("msg18");
          log("note");
        }
        send("msg7");
        send("msg3");
        break;
    }
    switch (event) {
      case EV1288:
        send("msg12");
        break;
      case EV1289:
        new S28();
        break;
      case EV1290:
        new S31();
        try {
          if (x3 > 0) {
            send("msg4");
            new S50();
            new S29();
            new S56();
          }
          try {
            new S54();
            new Helper();
          } catch (TimeoutException e) {
            send("msg13");
            new S52();
            log("note");
          } catch (IOException e) {
            new S55();
            send("msg13");
            new S58();
          }
          send("msg8");
        } catch (IllegalStateException e) {
          if (x3 > 0) {
            send("msg10");
            send("msg7");
          } else {
            send("msg9");
            new S90();
            new S45();
          }
          switch (event) {
            case EV1291:
              send("msg6");
              new S53();
              log("note");
              new Helper();
              break;
          }
          new S41();
        }
        break;
    }
    send("msg14");
    switch (event) {
      case EV1292:
        try {
          new S70();
          new S57();
          send("msg7");
        } catch (IllegalStateException e) {
          send("msg4");
          new S19();
        }
        if (x8 > 0) {
          new S28();
        } else {
          send("msg9");
        }
        new S78();
        break;
    }
  }
  public void start() {
    try {
      send("msg5");
      try {
        switch (event) {
          case EV1293:
            send("msg13");
            new S73();
            break;
        }
        if (x2 > 0) {
          log("note");
          new S5();
        } else {
          new S66();
          send("msg5");
          new S57();
          new S41();
        }
        try {
          new S56();
          new S59();
        } catch (IOException e) {
          send("msg8");
          new S50();
          new S23();
          new S84();
        }
        log("note");
      } catch (IOException e) {
        if (x6 > 0) {
          new S39();
          send("msg0");
        }
        new S2();
      } finally {
        switch (event) {
          case EV1294:
            send("msg13");
            log("note");
            new S47();
            break;
          case EV1295:
            send("msg4");
            new State();
            break;
        }
        if (x0 > 0) {
          send("msg2");
        } else {
          new S20();
          send("msg5");
          send("msg9");
        }
        send("msg11");
      }
      new Helper();
    } catch (IllegalStateException e) {
      send("msg19");
    } catch (IOException e) {
      send("msg0");
      new S60();
    }
  }
  void stop() {
    try {
      new S14();
      switch (event) {
        case EV1296:
          switch (event) {
            case EV1297:
              send("msg5");
              break;
            case EV1298:
              new S75();
              send("msg12");
              send("msg4");
              new S85();
              break;
            case EV1299:
              send("msg18");
              break;
          }
          send("msg3");
          send("msg18");
          break;
        case EV1300:
          new S19();
          break;
      }
    } catch (TimeoutException e) {
      switch (event) {
        case EV1301:
          send("msg8");
          switch (event) {
            case EV1302:
              new S87();
              new S70();
              log("note");
              break;
            case EV1303:
              new S100();
              new S89();
              break;
          }
          try {
            new S85();
            new S30();
            new S74();
            new S62();
          } catch (TimeoutException e) {
            send("msg1");
          }
          break;
        case EV1304:
          new S34();
          break;
      }
    } catch (IllegalStateException e) {
      if (x0 > 0) {
        new S73();
        new S23();
        new S89();
        new S50();
      }
    }
    if (x0 > 0) {
      send("msg11");
    }
    try {
      new S68();
      try {
        new S43();
        try {
          new S2();
        } catch (IOException e) {
          send("msg5");
          log("note");
          new S85();
        } finally {
          new S49();
          new S5();
          send("msg12");
          log("note");
        }
        new State();
        new S45();
      } catch (IOException e) {
        new S15();
        new S38();
        if (x9 > 0) {
          send("msg9");
          log("note");
          new S41();
          new S57();
        } else {
          send("msg14");
          new S74();
          send("msg5");
        }
      } catch (IOException e) {
        if (x9 > 0) {
          send("msg0");
          new S33();
          send("msg17");
          new S16();
        }
        send("msg17");
        send("msg2");
      }
      new S45();
    } catch (TimeoutException e) {
      send("msg3");
      try {
        if (x3 > 0) {
          new S22();
          new Helper();
          send("msg8");
        } else {
          send("msg14");
          new S100();
          send("msg2");
          new S86();
        }
      } catch (TimeoutException e) {
        log("note");
      } finally {
        new S100();
        send("msg0");
        switch (event) {
          case EV1305:
            send("msg6");
            break;
        }
      }
    } finally {
      new S63();
    }
    switch (event) {
      case EV1306:
        if (x6 > 0) {
          new S75();
          switch (event) {
            case EV1307:
              send("msg18");
              send("msg7");
              new S86();
              log("note");
              break;
          }
          send("msg5");
          new S50();
        }
        send("msg9");
        switch (event) {
          case EV1308:
            try {
              send("msg11");
              new S93();
            } catch (TimeoutException e) {
              send("msg15");
              new S30();
              send("msg3");
            } catch (IllegalStateException e) {
              new S80();
              new S92();
              send("msg19");
              new S68();
            }
            break;
          case EV1309:
            if (x3 > 0) {
              send("msg14");
              send("msg10");
            } else {
              new S40();
              log("note");
            }
            new Helper();
            try {
              send("msg9");
              log("note");
              send("msg3");
              send("msg11");
            } catch (IOException e) {
              new S78();
            }
            switch (event) {
              case EV1310:
                new S1();
                break;
            }
            break;
        }
        new S31();
        break;
      case EV1311:
        switch (event) {
          case EV1312:
            new S78();
            new S50();
            send("msg6");
            try {
              new S26();
            } catch (IOException e) {
              send("msg16");
              new S21();
              new S98();
            }
            break;
          case EV1313:
            new S13();
            break;
          case EV1314:
            if (x6 > 0) {
              new S90();
              send("msg6");
              new S7();
              new S86();
            }
            log("note");
            send("msg9");
            break;
        }
        send("msg14");
        break;
      case EV1315:
        if (x8 > 0) {
          new S31();
          switch (event) {
            case EV1316:
              send("msg3");
              log("note");
              new S42();
              break;
          }
        }
        try {
          new S76();
          if (x5 > 0) {
            new S49();
            new S12();
            new State();
          }
          send("msg14");
          send("msg13");
        } catch (TimeoutException e) {
          new S33();
        } finally {
          switch (event) {
            case EV1317:
              send("msg11");
              new S37();
              new S17();
              new S96();
              break;
            case EV1318:
              new S35();
              break;
          }
          new S31();
        }
        if (x7 > 0) {
          switch (event) {
            case EV1319:
              new S93();
              new S49();
              new S93();
              log("note");
              break;
            case EV1320:
              log("note");
              new S1();
              new S99();
              new S17();
              break;
          }
          new S62();
        }
        new S11();
        break;
    }
  }
  void pause() {
    new S8();
    if (x8 > 0) {
      send("msg8");
      new S38();
    } else {
      new S100();
      send("msg17");
      if (x5 > 0) {
        if (x8 > 0) {
          log("note");
        }
      }
      new S92();
    }
  }
}
