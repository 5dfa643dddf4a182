class S72 extends Abstract15 {
  void enter() {
    send("msg2");
    new S6();
    if (x9 > 0) {
      new S61();
      if (x3 > 0) {
        if (x5 > 0) {
          new S75();
          log("note");
          send("msg16");
        } else {
          new S97();
        }
      } else {
        if (x4 > 0) {
          send("msg18");
          send("msg6");
          new S89();
        } else {
          new S78();
        }
        switch (event) {
          case EV2194:
            new S8();
            send("msg18");
            break;
          case EV2195:
            send("msg1");
            break;
        }
        if (x1 > 0) {
          new S58();
          new S72();
          log("note");
        }
        if (x9 > 0) {
          new S91();
          new S42();
          new State();
          new S18();
        }
      }
      switch (event) {
        case EV2196:
          switch (event) {
            case EV2197:
              new State();
              send("msg10");
              break;
          }
          break;
        case EV2198:
          new S30();
          log("note");
          new S68();
          new S53();
          break;
        case EV2199:
          if (x7 > 0) {
            new State();
            new S79();
            new S91();
          }
          send("msg6");
          switch (event) {
            case EV2200:
              new S39();
              break;
            case EV2201:
              new S30();
              break;
          }
          break;
      }
    } else {
      try {
        new S1();
        new S89();
        send("msg3");
        new Helper();
      } catch (IOException e) {
        switch (event) {
          case EV2202:
            send("msg18");
            send("msg7");
            break;
          case EV2203:
            send("msg5");
            new S56();
            send("msg7");
            break;
        }
        try {
          new S17();
          new S47();
        } catch (TimeoutException e) {
          log("note");
        } catch (IOException e) {
          new S18();
          log("note");
          new S95();
        }
      } finally {
        new S31();
        new S32();
        new S44();
        if (x3 > 0) {
          new S51();
          send("msg7");
        }
      }
      send("msg15");
    }
    if (x5 > 0) {
      new S26();
      new S10();
      send("msg3");
    } else {
      log("note");
    }
  }
  void exit() {
    send("msg8");
  }
  public void handle() {
    send("msg4");
    new S21();
  }
  void tick() {
    send("msg17");
    switch (event) {
      case EV2204:
        send("msg2");
        send("msg17");
        try {
          new S92();
          log("note");
        } catch (IllegalStateException e) {
          switch (event) {
            case EV2205:
              send("msg5");
              send("msg19");
              break;
            case EV2206:
              new S90();
              new S5();
              send("msg15");
              new S57();
              break;
            case EV2207:
              log("note");
              break;
          }
        } catch (TimeoutException e) {
          send("msg8");
          try {
            new S40();
            new S64();
            new S92();
            new Helper();
          } catch (IOException e) {
            log("note");
            send("msg0");
            new S80();
          } catch (IOException e) {
            log("note");
            log("note");
            send("msg12");
            send("msg13");
          }
        }
        new S22();
        break;
      case EV2208:
        try {
          send("msg6");
        } catch (IllegalStateException e) {
          if (x7 > 0) {
            new S20();
            send("msg14");
            new S80();
          }
        } catch (IOException e) {
          new S17();
        }
        new S54();
        send("msg0");
        switch (event) {
          case EV2209:
            send("msg17");
            new Helper();
            new State();
            break;
          case EV2210:
            send("msg18");
            log("note");
            switch (event) {
              case EV2211:
                new S51();
                new Helper();
                break;
            }
            break;
        }
        break;
      case EV2212:
        new S35();
        new S18();
        new S45();
        send("msg0");
        break;
    }
    switch (event) {
      case EV2213:
        send("msg3");
        send("msg5");
        new S56();
        break;
      case EV2214:
        new S77();
        new S48();
        switch (event) {
          case EV2215:
            try {
              send("msg18");
            } catch (TimeoutException e) {
              new S72();
              new S10();
              new S27();
            } finally {
              new S79();
              new S22();
              send("msg12");
            }
            send("msg6");
            new S77();
            break;
          case EV2216:
            new S75();
            break;
        }
        break;
    }
  }
  void reset() {
    try {
      if (x1 > 0) {
        new Helper();
        send("msg5");
        new S87();
      } else {
        new S72();
        if (x6 > 0) {
          new S59();
          new S24();
          new S51();
          new S74();
        }
        send("msg9");
      }
      try {
        send("msg19");
        switch (event) {
          case EV2217:
            send("msg9");
            new S37();
            new S92();
            break;
          case EV2218:
            new Helper();
            break;
        }
      } catch (TimeoutException e) {
        new State();
        send("msg6");
      } finally {
        new S56();
      }
      new S71();
    } catch (IllegalStateException e) {
      new S23();
      send("msg17");
    }
    if (x9 > 0) {
      new S59();
      log("note");
    }
  }
  void open() {
    try {
      new S45();
    } catch (IOException e) {
      new S56();
      new S100();
      try {
        new S48();
      } catch (IllegalStateException e) {
        new S88();
        switch (event) {
          case EV2219:
            new S1();
            new S22();
            send("msg19");
            break;
          case EV2220:
            new S81();
            break;
        }
      } catch (IllegalStateException e) {
        try {
          new S75();
          new S62();
          new S20();
        } catch (TimeoutException e) {
          send("msg8");
          new S91();
        } catch (IOException e) {
          new S60();
          new S14();
          new S20();
          new S10();
        }
        send("msg9");
        new S38();
      }
      send("msg11");
    }
  }
  void close() {
    if (x1 > 0) {
      new S42();
      switch (event) {
        case EV2221:
          send("msg10");
          switch (event) {
            case EV2222:
              new S80();
              new S16();
              send("msg10");
              new S95();
              break;
            case EV2223:
              send("msg14");
              log("note");
              log("note");
              new S35();
              break;
            case EV2224:
              new S36();
              break;
          }
          if (x6 > 0) {
            new S46();
          }
          break;
      }
      log("note");
      log("note");
    }
    switch (event) {
      case EV2225:
        switch (event) {
          case EV2226:
            try {
              new S79();
            } catch (IllegalStateException e) {
              new S48();
            }
            break;
        }
        new S54();
        break;
    }
  }
  public void start() {
    new S4();
    send("msg4");
    send("msg14");
  }
  void stop() {
    if (x0 > 0) {
      new S3();
      try {
        new S94();
        if (x9 > 0) {
          new S7();
          log("note");
        }
      } catch (IllegalStateException e) {
        new S63();
        log("note");
      } finally {
        if (x3 > 0) {
          log("note");
          new State();
        }
        new Helper();
        send("msg12");
      }
    } else {
      new S46();
      send("msg19");
    }
    new S81();
    try {
      if (x7 > 0) {
        switch (event) {
          case EV2227:
            send("msg17");
            new S84();
            new S4();
            new S34();
            break;
          case EV2228:
            new S51();
            new S76();
            send("msg2");
            break;
        }
        new S79();
        new S9();
      }
    } finally {
      if (x1 > 0) {
        send("msg7");
      } else {
        new S1();
      }
    }
    send("msg13");
  }
  void pause() {
    send("msg15");
  }
}
