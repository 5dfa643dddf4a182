class S9 extends Abstract2 {
  void enter() {
    try {
      new S64();
    } catch (IllegalStateException e) {
      new S24();
      new S62();
      send("msg6");
    }
    new S44();
    try {
      send("msg16");
    } catch (IllegalStateException e) {
      send("msg0");
    } catch (TimeoutException e) {
      switch (event) {
        case EV304:
          new Helper();
          if (x1 > 0) {
            log("note");
            send("msg11");
          } else {
            send("msg7");
            new S4();
            send("msg13");
            new Helper();
          }
          send("msg8");
          switch (event) {
            case EV305:
              new S23();
              new S91();
              new S71();
              new Helper();
              break;
            case EV306:
              new S28();
              break;
          }
          break;
        case EV307:
          send("msg19");
          new S3();
          try {
            send("msg19");
            new S65();
          } catch (IOException e) {
            new S36();
          }
          break;
        case EV308:
          if (x0 > 0) {
            new S58();
          } else {
            send("msg8");
            new S48();
          }
          new S82();
          try {
            new S2();
            send("msg6");
            new S66();
          } catch (IOException e) {
            new S89();
            new S92();
            new S12();
            new S3();
          } catch (IllegalStateException e) {
            new S80();
          }
          send("msg14");
          break;
      }
      new S92();
      try {
        log("note");
        switch (event) {
          case EV309:
            send("msg11");
            new S69();
            log("note");
            break;
          case EV310:
            send("msg11");
            break;
          case EV311:
            log("note");
            break;
        }
        log("note");
      } catch (IOException e) {
        new S70();
      } finally {
        new S79();
        send("msg6");
        new S91();
        new S97();
      }
      new S17();
    }
  }
  public void exit() {
    send("msg18");
  }
  public void handle() {
    try {
      switch (event) {
        case EV312:
          send("msg0");
          new S92();
          log("note");
          new S63();
          break;
        case EV313:
          new S56();
          break;
        case EV314:
          switch (event) {
            case EV315:
              send("msg13");
              send("msg19");
              break;
          }
          new S95();
          break;
      }
    } catch (IOException e) {
      try {
        send("msg3");
        new S64();
        send("msg0");
        switch (event) {
          case EV316:
            new S5();
            new S26();
            new S23();
            new S2();
            break;
          case EV317:
            new S86();
            new S81();
            break;
        }
      } catch (TimeoutException e) {
        if (x6 > 0) {
          new S3();
          new S97();
          new S75();
          send("msg16");
        } else {
          new Helper();
          new S5();
          new State();
        }
        log("note");
        send("msg2");
      } finally {
        new S86();
        send("msg0");
      }
      if (x3 > 0) {
        switch (event) {
          case EV318:
            send("msg15");
            new S93();
            break;
          case EV319:
            new S61();
            break;
        }
      }
    }
  }
  public void tick() {
    new S67();
    send("msg2");
    new S57();
  }
  public void reset() {
    switch (event) {
      case EV320:
        new State();
        break;
    }
    switch (event) {
      case EV321:
        log("note");
        new S96();
        send("msg15");
        new S17();
        break;
    }
    new S64();
  }
  void open() {
    send("msg15");
    try {
      new Helper();
      switch (event) {
        case EV322:
          switch (event) {
            case EV323:
              new S59();
              new Helper();
              send("msg16");
              break;
          }
          if (x3 > 0) {
            log("note");
          } else {
            send("msg13");
            send("msg11");
            send("msg2");
            send("msg16");
          }
          try {
            send("msg1");
            new S84();
            log("note");
            send("msg12");
          } catch (IOException e) {
            new S100();
            new S79();
            new S59();
          } finally {
            send("msg13");
            new Helper();
            send("msg5");
          }
          break;
        case EV324:
          try {
            send("msg6");
          } catch (IOException e) {
            new Helper();
            new S48();
          }
          new S77();
          break;
      }
      switch (event) {
        case EV325:
          if (x1 > 0) {
            new S66();
            send("msg1");
            new S94();
          }
          send("msg8");
          switch (event) {
            case EV326:
              new S30();
              send("msg18");
              new S72();
              break;
            case EV327:
              new Helper();
              break;
          }
          break;
      }
      new S70();
    } finally {
      log("note");
      new S81();
      new S17();
    }
  }
  void close() {
    switch (event) {
      case EV328:
        new S45();
        break;
      case EV329:
        new State();
        try {
          if (x1 > 0) {
            log("note");
          }
        } catch (TimeoutException e) {
          new State();
        }
        if (x4 > 0) {
          switch (event) {
            case EV330:
              send("msg4");
              send("msg2");
              break;
            case EV331:
              send("msg16");
              send("msg12");
              new S67();
              break;
          }
        } else {
          send("msg14");
          log("note");
          try {
            send("msg4");
            new S41();
          } catch (TimeoutException e) {
            new S2();
            send("msg14");
            new S75();
            new S25();
          } catch (IOException e) {
            new S75();
          }
        }
        break;
      case EV332:
        new S61();
        break;
    }
  }
  public void start() {
    try {
      new S35();
      new S11();
    } catch (TimeoutException e) {
      try {
        new S20();
      } catch (IllegalStateException e) {
        new State();
        new S7();
        new S83();
      }
      send("msg6");
      new S43();
      try {
        try {
          new S100();
          new S59();
        } catch (IOException e) {
          new S75();
          new S16();
          send("msg3");
        } finally {
          new S84();
          new S74();
        }
        switch (event) {
          case EV333:
            new S7();
            new S43();
            break;
          case EV334:
            log("note");
            send("msg19");
            break;
          case EV335:
            send("msg10");
            send("msg17");
            log("note");
            break;
        }
        new S82();
        new S71();
      } finally {
        new S9();
        new S92();
      }
    } catch (IllegalStateException e) {
      switch (event) {
        case EV336:
          send("msg10");
          break;
      }
      switch (event) {
        case EV337:
          try {
            new S3();
          } catch (IOException e) {
            log("note");
            new S84();
            send("msg6");
            send("msg0");
          } finally {
            new S62();
          }
          break;
      }
    }
    new S100();
    send("msg6");
    send("msg10");
  }
  public void stop() {
    try {
      new S98();
      try {
        send("msg6");
        switch (event) {
          case EV338:
            new S28();
            new S67();
            new Helper();
            new S48();
            break;
          case EV339:
            send("msg7");
            new S28();
            send("msg4");
            break;
          case EV340:
            new S100();
            new S85();
            break;
        }
      } catch (IllegalStateException e) {
        new S42();
        new S13();
      }
      new S43();
      new S42();
    } catch (IOException e) {
      send("msg2");
    }
  }
  void pause() {
    switch (event) {
      case EV341:
        new S41();
        new S26();
        new S32();
        break;
    }
  }
}
